use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default commitment weight when a caller does not choose one.
pub const DEFAULT_BETA: f64 = 0.25;

/// The (d, S, K) triple plus the commitment weight β.
///
/// `subspaces == 1` is plain vector quantisation over the whole vector;
/// `subspaces == d` quantises every channel on its own (scalar
/// quantisation). Everything in between splits each d-dimensional vector
/// into S contiguous blocks of `d / S` channels, each with its own
/// codebook of `codebook_size` entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PQConfig {
    /// Embedding dimensionality d.
    pub d: usize,
    /// Number of subspaces S. Must divide d.
    pub subspaces: usize,
    /// Codewords per sub-codebook, K.
    pub codebook_size: usize,
    /// Commitment weight β in the quantisation loss.
    pub beta: f64,
}

impl PQConfig {
    pub fn new(d: usize, subspaces: usize, codebook_size: usize, beta: f64) -> Result<Self> {
        if d == 0 || subspaces == 0 || codebook_size == 0 {
            return Err(Error::invalid_input(format!(
                "d, subspaces and codebook_size must all be >= 1 (got d={d}, S={subspaces}, K={codebook_size})"
            )));
        }
        if d % subspaces != 0 {
            return Err(Error::invalid_input(format!(
                "subspaces must divide d: d={d}, S={subspaces}"
            )));
        }
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::invalid_input(format!(
                "beta must be finite and >= 0, got {beta}"
            )));
        }
        Ok(Self {
            d,
            subspaces,
            codebook_size,
            beta,
        })
    }

    /// Channels per subspace, d / S.
    pub fn sub_dim(&self) -> usize {
        self.d / self.subspaces
    }

    /// Size of the implicit product codebook, K^S. Never materialised;
    /// overflows u64 already at K=512, S=8, hence the big integer.
    pub fn fictive_size(&self) -> BigUint {
        BigUint::from(self.codebook_size).pow(self.subspaces as u32)
    }

    /// True when this configuration is classic single-codebook VQ.
    pub fn is_vector_quantisation(&self) -> bool {
        self.subspaces == 1
    }

    /// True when every channel is quantised independently.
    pub fn is_scalar_quantisation(&self) -> bool {
        self.subspaces == self.d
    }
}
