//! Chevalley basis structure constants.
//!
//! The basis is `h_1..h_l` (simple coroots) and `e_alpha` for every root, with
//! `[h_i, e_a] = <a, alpha_i^vee> e_a`, `[e_a, e_-a] = h_a` and
//! `[e_a, e_b] = N_{a,b} e_{a+b}`, `|N_{a,b}| = p + 1`.
//!
//! Signs are fixed on extraspecial pairs and propagated through the standard
//! identities for `N`:
//!
//! * `N_{a,b} = -N_{b,a}` and `N_{-a,-b} = -N_{a,b}`;
//! * `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)` when `a + b + c = 0`;
//! * for `a + b + c + d = 0` with no opposite pair,
//!   `N_{a,b}N_{c,d}/(a+b)^2 + N_{b,c}N_{a,d}/(b+c)^2 + N_{c,a}N_{b,d}/(c+a)^2 = 0`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSystem};

/// Sign assigned to `N` on extraspecial pairs. Any choice gives an isomorphic
/// algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignConvention {
    /// `N > 0` on every extraspecial pair.
    #[default]
    Positive,
    /// Sign alternates along the non-simple positive roots in the fixed order.
    Alternating,
}

/// A basis element of the full Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GBasis {
    /// Simple coroot `h_{i+1}` (0-based here).
    Cartan(usize),
    Root(RootId),
}

/// Sparse linear combination of basis elements.
pub type Combination = Vec<(GBasis, i64)>;

#[derive(Clone, Debug)]
pub struct StructureConstants {
    rank: usize,
    n_roots: usize,
    convention: SignConvention,
    /// `n[a * n_roots + b] = N_{a,b}`, zero when `a + b` is not a root.
    n: Vec<i64>,
    sums: Vec<Option<RootId>>,
    /// `<root a, alpha_i^vee>` at `a * rank + i`.
    cartan_action: Vec<i64>,
    /// Coefficients of `h_a` over `h_1..h_l`, per root.
    coroots: Vec<Vec<i64>>,
    negation: Vec<RootId>,
}

impl StructureConstants {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        Self::with_convention(rs, SignConvention::Positive)
    }

    pub fn with_convention(rs: &RootSystem, convention: SignConvention) -> Result<Self> {
        let npos = rs.num_positive();
        let nroots = rs.num_roots();
        let rank = rs.rank();
        let roots: Vec<_> = (0..nroots).map(|k| rs.root(RootId(k))).collect();
        let len: Vec<i64> = roots
            .iter()
            .map(|r| rs.inner(r.coeffs(), r.coeffs()) as i64)
            .collect();
        let neg: Vec<RootId> = (0..nroots).map(|k| rs.negate_id(RootId(k))).collect();

        // N on pairs of positive roots, indexed by positions.
        let mut pos_n = vec![0i64; npos * npos];
        let mut nonsimple_seen = 0usize;
        for xi in rank..npos {
            let xi_id = RootId(xi);
            let mut special: Vec<(usize, usize)> = Vec::new();
            for a in 0..npos {
                for b in a + 1..npos {
                    if rs.sum_id(RootId(a), RootId(b)) == Some(xi_id) {
                        special.push((a, b));
                    }
                }
            }
            // The extraspecial pair has the least first entry.
            special.sort();
            let Some(&(a0, b0)) = special.first() else {
                return Err(Error::Internal(format!("root {} has no decomposition", roots[xi])));
            };
            let p = string_below(rs, RootId(b0), RootId(a0));
            let sign = match convention {
                SignConvention::Positive => 1,
                SignConvention::Alternating if nonsimple_seen % 2 == 1 => -1,
                SignConvention::Alternating => 1,
            };
            nonsimple_seen += 1;
            pos_n[a0 * npos + b0] = sign * (p + 1);

            let ctx = Ctx {
                rs,
                npos,
                len: &len,
                neg: &neg,
                pos_n: &pos_n,
            };
            let n_neg_extra = Ratio::from_integer(-pos_n[a0 * npos + b0]);
            let mut fills = Vec::new();
            for &(a, b) in &special[1..] {
                let (ida, idb, ida0, idb0) = (RootId(a), RootId(b), RootId(a0), RootId(b0));
                let mut acc = Ratio::from_integer(0i64);
                if let Some(d) = rs.sum_id(idb, neg[a0]) {
                    let t = ctx.n_any(idb, neg[ida0.0])? * ctx.n_any(ida, neg[idb0.0])?;
                    acc -= Ratio::new(t, len[d.0]);
                }
                if let Some(d) = rs.sum_id(ida, neg[a0]) {
                    let t = ctx.n_any(neg[ida0.0], ida)? * ctx.n_any(idb, neg[idb0.0])?;
                    acc -= Ratio::new(t, len[d.0]);
                }
                let value = Ratio::from_integer(len[xi]) * acc / n_neg_extra;
                if !value.is_integer() {
                    return Err(Error::Internal(format!(
                        "non-integral N for ({}, {})",
                        roots[a], roots[b]
                    )));
                }
                fills.push((a, b, value.to_integer()));
            }
            for (a, b, v) in fills {
                pos_n[a * npos + b] = v;
            }
        }

        let ctx = Ctx {
            rs,
            npos,
            len: &len,
            neg: &neg,
            pos_n: &pos_n,
        };
        let mut n = vec![0i64; nroots * nroots];
        let mut sums = vec![None; nroots * nroots];
        for a in 0..nroots {
            for b in 0..nroots {
                if let Some(c) = rs.sum_id(RootId(a), RootId(b)) {
                    n[a * nroots + b] = ctx.n_any(RootId(a), RootId(b))?;
                    sums[a * nroots + b] = Some(c);
                }
            }
        }

        let mut cartan_action = vec![0i64; nroots * rank];
        let mut coroots = Vec::with_capacity(nroots);
        for (a, r) in roots.iter().enumerate() {
            for i in 0..rank {
                let simple = crate::rootsys::Root::simple(rank, i + 1);
                cartan_action[a * rank + i] = rs.pairing_coeffs(r.coeffs(), simple.coeffs()) as i64;
            }
            coroots.push(rs.coroot_coeffs(r).into_iter().map(|c| c as i64).collect());
        }

        let sc = StructureConstants {
            rank,
            n_roots: nroots,
            convention,
            n,
            sums,
            cartan_action,
            coroots,
            negation: neg,
        };
        sc.check_magnitudes(rs)?;
        sc.check_jacobi_sampled(2000, 0x5eed)?;
        Ok(sc)
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.rank + self.n_roots
    }

    /// `N_{a,b}`; zero when `a + b` is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> i64 {
        self.n[a.0 * self.n_roots + b.0]
    }

    /// Coefficients of `h_a` over the simple coroots.
    pub fn coroot(&self, a: RootId) -> &[i64] {
        &self.coroots[a.0]
    }

    /// `<root a, alpha_{i+1}^vee>`.
    pub fn cartan_action(&self, a: RootId, i: usize) -> i64 {
        self.cartan_action[a.0 * self.rank + i]
    }

    /// Basis of the whole algebra: Cartan part first, then all roots by id.
    pub fn full_basis(&self) -> Vec<GBasis> {
        (0..self.rank)
            .map(GBasis::Cartan)
            .chain((0..self.n_roots).map(|k| GBasis::Root(RootId(k))))
            .collect()
    }

    pub fn bracket(&self, x: GBasis, y: GBasis) -> Combination {
        match (x, y) {
            (GBasis::Cartan(_), GBasis::Cartan(_)) => Vec::new(),
            (GBasis::Cartan(i), GBasis::Root(a)) => {
                let c = self.cartan_action(a, i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(GBasis::Root(a), c)]
                }
            }
            (GBasis::Root(a), GBasis::Cartan(i)) => {
                let c = self.cartan_action(a, i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(GBasis::Root(a), -c)]
                }
            }
            (GBasis::Root(a), GBasis::Root(b)) => {
                if self.negation[a.0] == b {
                    self.coroots[a.0]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (GBasis::Cartan(i), c))
                        .collect()
                } else if let Some(c) = self.sums[a.0 * self.n_roots + b.0] {
                    vec![(GBasis::Root(c), self.n(a, b))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    fn bracket_with(&self, x: GBasis, comb: &Combination, scale: i64, acc: &mut BTreeMap<GBasis, i64>) {
        for &(y, c) in comb {
            for (z, d) in self.bracket(x, y) {
                *acc.entry(z).or_insert(0) += scale * c * d;
            }
        }
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`, zero entries dropped.
    pub fn jacobiator(&self, x: GBasis, y: GBasis, z: GBasis) -> Vec<(GBasis, i64)> {
        let mut acc = BTreeMap::new();
        self.bracket_with(x, &self.bracket(y, z), 1, &mut acc);
        self.bracket_with(y, &self.bracket(z, x), 1, &mut acc);
        self.bracket_with(z, &self.bracket(x, y), 1, &mut acc);
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Jacobi identity on every triple of basis elements.
    pub fn check_jacobi_exhaustive(&self) -> Result<()> {
        let basis = self.full_basis();
        for &x in &basis {
            for &y in &basis {
                for &z in &basis {
                    self.check_triple(x, y, z)?;
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity on `count` seeded random triples.
    pub fn check_jacobi_sampled(&self, count: usize, seed: u64) -> Result<()> {
        let basis = self.full_basis();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..count {
            let x = basis[rng.gen_range(0..basis.len())];
            let y = basis[rng.gen_range(0..basis.len())];
            let z = basis[rng.gen_range(0..basis.len())];
            self.check_triple(x, y, z)?;
        }
        Ok(())
    }

    fn check_triple(&self, x: GBasis, y: GBasis, z: GBasis) -> Result<()> {
        let j = self.jacobiator(x, y, z);
        if j.is_empty() {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "Jacobi identity fails on ({x:?}, {y:?}, {z:?}): {j:?}"
            )))
        }
    }

    fn check_magnitudes(&self, rs: &RootSystem) -> Result<()> {
        for a in 0..self.n_roots {
            for b in 0..self.n_roots {
                let (ia, ib) = (RootId(a), RootId(b));
                if rs.sum_id(ia, ib).is_some() {
                    let p = string_below(rs, ib, ia);
                    if self.n(ia, ib).abs() != p + 1 || self.n(ia, ib) != -self.n(ib, ia) {
                        return Err(Error::Internal(format!(
                            "N({}, {}) = {} but p = {p}",
                            rs.root(ia),
                            rs.root(ib),
                            self.n(ia, ib)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Largest `p` with `b - p a` a root.
fn string_below(rs: &RootSystem, b: RootId, a: RootId) -> i64 {
    let minus_a = rs.negate_id(a);
    let mut p = 0;
    let mut cur = b;
    while let Some(next) = rs.sum_id(cur, minus_a) {
        p += 1;
        cur = next;
    }
    p
}

struct Ctx<'a> {
    rs: &'a RootSystem,
    npos: usize,
    len: &'a [i64],
    neg: &'a [RootId],
    pos_n: &'a [i64],
}

impl Ctx<'_> {
    fn n_pos(&self, a: usize, b: usize) -> i64 {
        if a < b {
            self.pos_n[a * self.npos + b]
        } else {
            -self.pos_n[b * self.npos + a]
        }
    }

    /// `N_{x,y}` for any roots with `x + y` a root, from the positive table.
    fn n_any(&self, x: RootId, y: RootId) -> Result<i64> {
        let px = x.0 < self.npos;
        let py = y.0 < self.npos;
        let s = self
            .rs
            .sum_id(x, y)
            .ok_or_else(|| Error::Internal("N requested for a non-root sum".into()))?;
        if px && py {
            return Ok(self.n_pos(x.0, y.0));
        }
        if !px && !py {
            return Ok(-self.n_pos(self.neg[x.0].0, self.neg[y.0].0));
        }
        // x + y + z = 0; move to the pair of equal signs.
        let z = self.neg[s.0];
        let pz = z.0 < self.npos;
        let (num, den) = if py == pz {
            (self.len[z.0] * self.n_any(y, z)?, self.len[x.0])
        } else {
            (self.len[z.0] * self.n_any(z, x)?, self.len[y.0])
        };
        if num % den != 0 {
            return Err(Error::Internal("non-integral structure constant".into()));
        }
        Ok(num / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Root, SimpleType};

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn id(sys: &RootSystem, c: &[i32]) -> RootId {
        sys.id_of(&Root::new(c.to_vec())).unwrap()
    }

    #[test]
    fn a2_simple_bracket() {
        let a2 = rs("A2");
        let sc = StructureConstants::new(&a2).unwrap();
        let n = sc.n(id(&a2, &[1, 0]), id(&a2, &[0, 1]));
        assert_eq!(n.abs(), 1);
        assert_eq!(
            sc.bracket(GBasis::Root(id(&a2, &[1, 0])), GBasis::Root(id(&a2, &[0, 1]))),
            vec![(GBasis::Root(id(&a2, &[1, 1])), n)]
        );
    }

    #[test]
    fn g2_string_magnitude() {
        let g2 = rs("G2");
        let sc = StructureConstants::new(&g2).unwrap();
        assert_eq!(sc.n(id(&g2, &[1, 0]), id(&g2, &[1, 1])).abs(), 2);
        assert_eq!(sc.n(id(&g2, &[1, 0]), id(&g2, &[2, 1])).abs(), 3);
    }

    #[test]
    fn self_bracket_vanishes() {
        let b3 = rs("B3");
        let sc = StructureConstants::new(&b3).unwrap();
        for x in sc.full_basis() {
            assert!(sc.bracket(x, x).is_empty());
        }
    }

    #[test]
    fn sl2_relations() {
        let a1 = rs("A1");
        let sc = StructureConstants::new(&a1).unwrap();
        let e = GBasis::Root(RootId(0));
        let f = GBasis::Root(RootId(1));
        let h = GBasis::Cartan(0);
        assert_eq!(sc.bracket(e, f), vec![(h, 1)]);
        assert_eq!(sc.bracket(h, e), vec![(e, 2)]);
        assert_eq!(sc.bracket(h, f), vec![(f, -2)]);
    }

    #[test]
    fn jacobi_exhaustive_rank_le_3() {
        for t in SimpleType::all_up_to(3) {
            for conv in [SignConvention::Positive, SignConvention::Alternating] {
                let sys = RootSystem::new(t).unwrap();
                let sc = StructureConstants::with_convention(&sys, conv).unwrap();
                sc.check_jacobi_exhaustive().unwrap_or_else(|e| panic!("{t} {conv:?}: {e}"));
            }
        }
    }

    #[test]
    fn conventions_differ_somewhere() {
        let a3 = rs("A3");
        let p = StructureConstants::with_convention(&a3, SignConvention::Positive).unwrap();
        let q = StructureConstants::with_convention(&a3, SignConvention::Alternating).unwrap();
        assert_ne!(p.n, q.n);
    }
}
