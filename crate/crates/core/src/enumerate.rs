//! Enumeration of `(S, T)` pairs and parallel verification of the index
//! against the bound `d_{S,T}`.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::StructureConstants;
use crate::error::Result;
use crate::rootsys::{RootSystem, Subset};
use crate::seaweed::{verify_pair, PairReport};

/// Every pair `(S, T)` of subsets of `Pi`, sorted by bitset values.
pub fn all_pairs(rank: usize) -> Vec<(Subset, Subset)> {
    let count = 1u32 << rank;
    (0..count)
        .flat_map(|s| (0..count).map(move |t| (Subset::from_bits(s), Subset::from_bits(t))))
        .collect()
}

/// All pairs, or a seeded uniform sample of `max_pairs` of them (kept in
/// canonical order) when there are more. The flag reports sampling.
pub fn select_pairs(rank: usize, max_pairs: Option<usize>, seed: u64) -> (Vec<(Subset, Subset)>, bool) {
    let pairs = all_pairs(rank);
    match max_pairs {
        Some(cap) if cap < pairs.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = index::sample(&mut rng, pairs.len(), cap).into_vec();
            picked.sort_unstable();
            (picked.into_iter().map(|i| pairs[i]).collect(), true)
        }
        _ => (pairs, false),
    }
}

/// Seed for one pair, independent of evaluation order.
pub fn pair_seed(seed: u64, s: Subset, t: Subset) -> u64 {
    let key = ((s.bits() as u64) << 32) | t.bits() as u64;
    let mut z = seed ^ key.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub s: Subset,
    pub t: Subset,
    pub chi: usize,
    pub d: usize,
    pub bound_ok: bool,
    pub equality: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub total_pairs: usize,
    pub sampled: bool,
    pub bound_violations: usize,
    pub equality_failures: usize,
    pub pairs: Vec<PairRecord>,
}

impl VerifySummary {
    /// 0 when everything holds, 3 on any bound violation, 1 on any equality failure.
    pub fn exit_code(&self) -> i32 {
        if self.bound_violations > 0 {
            3
        } else if self.equality_failures > 0 {
            1
        } else {
            0
        }
    }
}

/// Evaluates the given pairs in parallel; the result keeps the input order.
pub fn verify_pairs(
    rs: &RootSystem,
    sc: &StructureConstants,
    pairs: &[(Subset, Subset)],
    trials: usize,
    seed: u64,
) -> Result<Vec<PairRecord>> {
    pairs
        .par_iter()
        .map(|&(s, t)| {
            let PairReport { chi, d, bound_ok, equality } =
                verify_pair(rs, sc, s, t, trials, pair_seed(seed, s, t))?;
            Ok(PairRecord { s, t, chi, d, bound_ok, equality })
        })
        .collect()
}

pub fn verify_type(
    rs: &RootSystem,
    sc: &StructureConstants,
    trials: usize,
    seed: u64,
    max_pairs: Option<usize>,
) -> Result<VerifySummary> {
    let total_pairs = 1usize << (2 * rs.rank());
    let (pairs, sampled) = select_pairs(rs.rank(), max_pairs, seed);
    let records = verify_pairs(rs, sc, &pairs, trials, seed)?;
    Ok(VerifySummary {
        total_pairs,
        sampled,
        bound_violations: records.iter().filter(|r| !r.bound_ok).count(),
        equality_failures: records.iter().filter(|r| !r.equality).count(),
        pairs: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts_and_order() {
        let p = all_pairs(2);
        assert_eq!(p.len(), 16);
        assert!(p.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        let (sample, sampled) = select_pairs(3, Some(10), 5);
        assert!(sampled);
        assert_eq!(sample.len(), 10);
        assert!(sample.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(select_pairs(3, Some(10), 5).0, sample);
        assert!(!select_pairs(2, Some(100), 5).1);
    }

    #[test]
    fn b2_verifies() {
        let rs = RootSystem::new("B2".parse().unwrap()).unwrap();
        let sc = StructureConstants::new(&rs).unwrap();
        let summary = verify_type(&rs, &sc, 3, 42, None).unwrap();
        assert_eq!(summary.pairs.len(), 16);
        assert_eq!(summary.exit_code(), 0);
    }
}
