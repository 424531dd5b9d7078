//! Row-major float image buffer.

use crate::Real;

/// H×W×C image with row-major storage. Ground-truth data lives in [0, 1];
/// raw renders are clamped via [`ImageBuffer::clamped01`] before any loss or
/// metric touches them.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuffer {
    pub height: usize,
    pub width: usize,
    pub channels: usize,
    pub data: Vec<Real>,
}

impl ImageBuffer {
    pub fn zeros(height: usize, width: usize, channels: usize) -> Self {
        assert!(channels == 1 || channels == 3, "channels must be 1 or 3");
        Self {
            height,
            width,
            channels,
            data: vec![0.0; height * width * channels],
        }
    }

    pub fn from_data(height: usize, width: usize, channels: usize, data: Vec<Real>) -> Self {
        assert_eq!(data.len(), height * width * channels);
        assert!(channels == 1 || channels == 3);
        Self {
            height,
            width,
            channels,
            data,
        }
    }

    #[inline]
    pub fn idx(&self, y: usize, x: usize, c: usize) -> usize {
        (y * self.width + x) * self.channels + c
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, c: usize) -> Real {
        self.data[self.idx(y, x, c)]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, c: usize, v: Real) {
        let i = self.idx(y, x, c);
        self.data[i] = v;
    }

    pub fn same_shape(&self, other: &ImageBuffer) -> bool {
        self.height == other.height && self.width == other.width && self.channels == other.channels
    }

    /// Copy with every value clamped to [0, 1].
    pub fn clamped01(&self) -> ImageBuffer {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = v.clamp(0.0, 1.0);
        }
        out
    }

    /// Mean over all pixel-channels.
    pub fn mean(&self) -> Real {
        if self.data.is_empty() {
            return 0.0;
        }
        (self.data.iter().map(|&v| v as f64).sum::<f64>() / self.data.len() as f64) as Real
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_is_row_major_interleaved() {
        let mut img = ImageBuffer::zeros(2, 3, 3);
        img.set(1, 2, 0, 0.5);
        assert_eq!(img.data[(1 * 3 + 2) * 3], 0.5);
    }

    #[test]
    fn clamp_bounds_values() {
        let img = ImageBuffer::from_data(1, 1, 3, vec![-0.5, 0.25, 1.5]);
        assert_eq!(img.clamped01().data, vec![0.0, 0.25, 1.0]);
    }
}
