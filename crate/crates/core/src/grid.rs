use crate::error::{Error, Result};

/// An h×w field of d-dimensional vectors stored row-major, one contiguous
/// d-slice per spatial location ("latent pixel").
///
/// All values are finite by construction; every operation in the crate
/// relies on that.
#[derive(Debug, Clone, PartialEq)]
pub struct LatentGrid {
    h: usize,
    w: usize,
    d: usize,
    data: Vec<f64>,
}

impl LatentGrid {
    pub fn new(h: usize, w: usize, d: usize, data: Vec<f64>) -> Result<Self> {
        if h == 0 || w == 0 || d == 0 {
            return Err(Error::invalid_input(format!(
                "grid dimensions must be >= 1 (got {h}x{w}x{d})"
            )));
        }
        let expected = h * w * d;
        if data.len() != expected {
            return Err(Error::invalid_input(format!(
                "grid data length {} does not match {h}x{w}x{d} = {expected}",
                data.len()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("latent grid data".into()));
        }
        Ok(Self { h, w, d, data })
    }

    /// Construct without the finite scan. For values that are already
    /// guaranteed finite (e.g. codeword lookups).
    pub(crate) fn new_unchecked(h: usize, w: usize, d: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), h * w * d);
        Self { h, w, d, data }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_pixels(&self) -> usize {
        self.h * self.w
    }

    /// Total scalar count h·w·d.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// The d-slice of pixel `i` in raster order.
    pub fn pixel(&self, i: usize) -> &[f64] {
        let start = i * self.d;
        &self.data[start..start + self.d]
    }

    /// The d-slice at row `y`, column `x`.
    pub fn pixel_at(&self, y: usize, x: usize) -> &[f64] {
        self.pixel(y * self.w + x)
    }

    pub fn pixels(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.d)
    }
}

/// An h×w field of S-tuples of sub-codebook indices — the quantised
/// representation of a [`LatentGrid`].
///
/// The grid itself does not know K; operations that need the bound take
/// it as a parameter and validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexGrid {
    h: usize,
    w: usize,
    subspaces: usize,
    indices: Vec<u32>,
}

impl IndexGrid {
    pub fn new(h: usize, w: usize, subspaces: usize, indices: Vec<u32>) -> Result<Self> {
        if h == 0 || w == 0 || subspaces == 0 {
            return Err(Error::invalid_input(format!(
                "index grid dimensions must be >= 1 (got {h}x{w}, S={subspaces})"
            )));
        }
        let expected = h * w * subspaces;
        if indices.len() != expected {
            return Err(Error::invalid_input(format!(
                "index count {} does not match {h}x{w}xS={expected}",
                indices.len()
            )));
        }
        Ok(Self {
            h,
            w,
            subspaces,
            indices,
        })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn subspaces(&self) -> usize {
        self.subspaces
    }

    pub fn n_pixels(&self) -> usize {
        self.h * self.w
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// The S-tuple of pixel `i` in raster order.
    pub fn tuple(&self, i: usize) -> &[u32] {
        let start = i * self.subspaces;
        &self.indices[start..start + self.subspaces]
    }

    pub fn tuples(&self) -> impl Iterator<Item = &[u32]> {
        self.indices.chunks_exact(self.subspaces)
    }

    /// Check that every index is below `k`.
    pub fn validate_against(&self, k: usize) -> Result<()> {
        match self.indices.iter().position(|&i| i as usize >= k) {
            None => Ok(()),
            Some(pos) => Err(Error::invalid_input(format!(
                "index {} at flat position {pos} is out of range for K={k}",
                self.indices[pos]
            ))),
        }
    }
}
