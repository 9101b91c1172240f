//! Pure subspace algebra: splitting pixels into contiguous channel
//! blocks, the inverse join, and the bijection between index tuples and
//! joint product-codebook codes.

use num_bigint::BigUint;

use crate::config::PQConfig;
use crate::error::{Error, Result};

/// Split a d-dimensional pixel into S contiguous subvectors of d/S
/// channels: subspace s receives channels [s·d/S, (s+1)·d/S).
pub fn split_pixel(pixel: &[f64], config: &PQConfig) -> Result<Vec<Vec<f64>>> {
    if pixel.len() != config.d {
        return Err(Error::invalid_input(format!(
            "pixel has {} channels, config expects d={}",
            pixel.len(),
            config.d
        )));
    }
    Ok(pixel
        .chunks_exact(config.sub_dim())
        .map(|c| c.to_vec())
        .collect())
}

/// Concatenate S equally sized subvectors back into one pixel.
/// Exact inverse of [`split_pixel`].
pub fn join_subvectors(parts: &[Vec<f64>]) -> Result<Vec<f64>> {
    if parts.is_empty() {
        return Err(Error::invalid_input("no subvectors to join"));
    }
    let sub_dim = parts[0].len();
    if sub_dim == 0 {
        return Err(Error::invalid_input("subvectors must be non-empty"));
    }
    if let Some(bad) = parts.iter().position(|p| p.len() != sub_dim) {
        return Err(Error::invalid_input(format!(
            "ragged subvectors: part {bad} has length {}, expected {sub_dim}",
            parts[bad].len()
        )));
    }
    let mut out = Vec::with_capacity(parts.len() * sub_dim);
    for p in parts {
        out.extend_from_slice(p);
    }
    Ok(out)
}

/// Encode an S-tuple of sub-codebook indices as a single code in
/// [0, K^S): mixed-radix base K, subspace 0 most significant.
///
/// The joint codebook is combinatorial and never materialised; this code
/// exists only as an in-memory handle on one of its cells.
pub fn fictive_index(indices: &[u32], config: &PQConfig) -> Result<BigUint> {
    if indices.len() != config.subspaces {
        return Err(Error::invalid_input(format!(
            "expected {} indices, got {}",
            config.subspaces,
            indices.len()
        )));
    }
    let k = config.codebook_size;
    let big_k = BigUint::from(k);
    let mut code = BigUint::ZERO;
    for &i in indices {
        if i as usize >= k {
            return Err(Error::invalid_input(format!(
                "index {i} out of range for K={k}"
            )));
        }
        code = code * &big_k + BigUint::from(i);
    }
    Ok(code)
}

/// Decode a joint code back into its S-tuple of sub-codebook indices.
/// Exact inverse of [`fictive_index`].
pub fn unfictive_index(code: &BigUint, config: &PQConfig) -> Result<Vec<u32>> {
    if *code >= config.fictive_size() {
        return Err(Error::invalid_input(format!(
            "code {code} out of range for K^S = {}",
            config.fictive_size()
        )));
    }
    let big_k = BigUint::from(config.codebook_size);
    let mut rest = code.clone();
    let mut out = vec![0u32; config.subspaces];
    for slot in out.iter_mut().rev() {
        let digit = &rest % &big_k;
        rest /= &big_k;
        // digit < K <= usize::MAX and K fits u32 by construction of the tests
        // that reach here; K is bounded by the u32 index domain everywhere.
        let ds = digit.to_u32_digits();
        *slot = if ds.is_empty() { 0 } else { ds[0] };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg(d: usize, s: usize, k: usize) -> PQConfig {
        PQConfig::new(d, s, k, 0.25).unwrap()
    }

    #[test]
    fn split_examples() {
        let parts = split_pixel(&[1., 2., 3., 4.], &cfg(4, 2, 2)).unwrap();
        assert_eq!(parts, vec![vec![1., 2.], vec![3., 4.]]);

        // scalar quantisation layout
        let parts = split_pixel(&[1., 2., 3., 4.], &cfg(4, 4, 2)).unwrap();
        assert_eq!(parts, vec![vec![1.], vec![2.], vec![3.], vec![4.]]);

        // VQ case, identity split
        let parts = split_pixel(&[5., 6.], &cfg(2, 1, 2)).unwrap();
        assert_eq!(parts, vec![vec![5., 6.]]);
    }

    #[test]
    fn split_rejects_dim_mismatch() {
        assert!(split_pixel(&[1., 2., 3.], &cfg(4, 2, 2)).is_err());
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            join_subvectors(&[vec![1., 2.], vec![3., 4.]]).unwrap(),
            vec![1., 2., 3., 4.]
        );
        assert_eq!(join_subvectors(&[vec![7.]]).unwrap(), vec![7.]);
        assert!(join_subvectors(&[vec![1.], vec![2., 3.]]).is_err());
        assert!(join_subvectors(&[]).is_err());
    }

    #[test]
    fn split_join_roundtrip_exhaustive_divisors() {
        // every divisor S of every d <= 16, random pixels
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 1..=16usize {
            let pixel: Vec<f64> = (0..d).map(|_| rng.gen_range(-10.0..10.0)).collect();
            for s in 1..=d {
                if d % s != 0 {
                    continue;
                }
                let c = cfg(d, s, 2);
                let joined = join_subvectors(&split_pixel(&pixel, &c).unwrap()).unwrap();
                assert_eq!(joined, pixel, "d={d} S={s}");
            }
        }
    }

    #[test]
    fn fictive_examples() {
        assert_eq!(
            fictive_index(&[1, 0, 1], &cfg(3, 3, 2)).unwrap(),
            BigUint::from(5u32)
        );
        // zero tuple at paper-scale K and S
        let c = cfg(64, 64, 512);
        assert_eq!(fictive_index(&[0; 64], &c).unwrap(), BigUint::ZERO);
        assert!(fictive_index(&[2, 0, 0], &cfg(3, 3, 2)).is_err());
        assert!(fictive_index(&[0, 0], &cfg(3, 3, 2)).is_err());
    }

    #[test]
    fn unfictive_examples() {
        let c = cfg(3, 3, 2);
        assert_eq!(
            unfictive_index(&BigUint::from(5u32), &c).unwrap(),
            vec![1, 0, 1]
        );
        assert_eq!(unfictive_index(&BigUint::ZERO, &c).unwrap(), vec![0, 0, 0]);
        assert!(unfictive_index(&BigUint::from(8u32), &c).is_err());
    }

    #[test]
    fn bijection_exhaustive_small_products() {
        // brute force over every code for K^S <= 10^4; fictive∘unfictive == id
        // over the whole finite domain proves the bijection
        for (s, k) in [(4usize, 3usize), (3, 4), (2, 100), (13, 2), (4, 10)] {
            let c = cfg(s, s, k);
            let total = k.pow(s as u32);
            for flat in 0..total {
                let code = BigUint::from(flat);
                let tuple = unfictive_index(&code, &c).unwrap();
                assert!(tuple.iter().all(|&i| (i as usize) < k));
                assert_eq!(fictive_index(&tuple, &c).unwrap(), code, "K={k} S={s}");
            }
        }
    }

    #[test]
    fn all_tuples_roundtrip_k3_s4() {
        // tuple-side direction: every one of the 81 tuples survives
        let c = cfg(4, 4, 3);
        for flat in 0..81u32 {
            let tuple: Vec<u32> = (0..4)
                .rev()
                .map(|pos| (flat / 3u32.pow(pos)) % 3)
                .collect();
            let code = fictive_index(&tuple, &c).unwrap();
            assert_eq!(unfictive_index(&code, &c).unwrap(), tuple);
        }
    }
}
