use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::PQConfig;
use crate::error::{Error, Result};

/// K codewords of one subspace, stored flat (entry-major, `sub_dim`
/// channels each).
#[derive(Debug, Clone, PartialEq)]
pub struct SubCodebook {
    sub_dim: usize,
    entries: Vec<f64>,
}

impl SubCodebook {
    pub fn new(sub_dim: usize, entries: Vec<f64>) -> Result<Self> {
        if sub_dim == 0 {
            return Err(Error::invalid_input("sub_dim must be >= 1"));
        }
        if entries.is_empty() || entries.len() % sub_dim != 0 {
            return Err(Error::invalid_input(format!(
                "entry buffer length {} is not a positive multiple of sub_dim {sub_dim}",
                entries.len()
            )));
        }
        if !entries.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("codebook entries".into()));
        }
        Ok(Self { sub_dim, entries })
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_dim
    }

    /// Number of codewords K.
    pub fn len(&self) -> usize {
        self.entries.len() / self.sub_dim
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, k: usize) -> &[f64] {
        let start = k * self.sub_dim;
        &self.entries[start..start + self.sub_dim]
    }

    pub fn entries(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks_exact(self.sub_dim)
    }

    pub fn raw(&self) -> &[f64] {
        &self.entries
    }

    pub(crate) fn entry_mut(&mut self, k: usize) -> &mut [f64] {
        let start = k * self.sub_dim;
        &mut self.entries[start..start + self.sub_dim]
    }
}

/// S sub-codebooks plus the configuration that shapes them.
///
/// Immutable once built; training produces a new value.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCodebook {
    config: PQConfig,
    books: Vec<SubCodebook>,
}

impl ProductCodebook {
    pub fn new(config: PQConfig, books: Vec<SubCodebook>) -> Result<Self> {
        if books.len() != config.subspaces {
            return Err(Error::invalid_input(format!(
                "expected {} sub-codebooks, got {}",
                config.subspaces,
                books.len()
            )));
        }
        for (s, book) in books.iter().enumerate() {
            if book.sub_dim() != config.sub_dim() {
                return Err(Error::invalid_input(format!(
                    "sub-codebook {s} has sub_dim {}, expected {}",
                    book.sub_dim(),
                    config.sub_dim()
                )));
            }
            if book.len() != config.codebook_size {
                return Err(Error::invalid_input(format!(
                    "sub-codebook {s} has {} entries, expected K={}",
                    book.len(),
                    config.codebook_size
                )));
            }
        }
        Ok(Self { config, books })
    }

    /// Codebook with entries drawn uniformly from [-1, 1). Used by the
    /// benchmark and tests; real codebooks come from the trainer.
    pub fn random(config: PQConfig, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sub_dim = config.sub_dim();
        let books = (0..config.subspaces)
            .map(|_| {
                let entries = (0..config.codebook_size * sub_dim)
                    .map(|_| rng.gen_range(-1.0..1.0))
                    .collect();
                SubCodebook::new(sub_dim, entries).expect("generated entries are valid")
            })
            .collect();
        Self { config, books }
    }

    pub fn config(&self) -> &PQConfig {
        &self.config
    }

    pub fn books(&self) -> &[SubCodebook] {
        &self.books
    }

    pub fn book(&self, s: usize) -> &SubCodebook {
        &self.books[s]
    }

    pub(crate) fn books_mut(&mut self) -> &mut [SubCodebook] {
        &mut self.books
    }
}
