//! Standard seaweed subalgebras `q = h + g^{R+^S} + g^{R-^T}`, the alternating
//! form `Phi_f(X, Y) = f([X, Y])` and everything derived from its rank.
//!
//! Seaweeds are always given by a pair `(S, T)` of subsets of simple roots;
//! every seaweed is conjugate to one of these.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cascade::{cascade, dim_span_epsilons, CascadeSet};
use crate::chevalley::{GBasis, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Root, RootId, RootSystem, Subset};

/// Random coordinates are drawn from `[-COORD_BOUND, COORD_BOUND]`.
pub const COORD_BOUND: i64 = 1 << 20;

pub const DEFAULT_TRIALS: usize = 3;

#[derive(Clone, Debug)]
pub struct Seaweed<'a> {
    rs: &'a RootSystem,
    s: Subset,
    t: Subset,
    basis: Vec<GBasis>,
    /// Basis position of each `GBasis`: Cartan `i` at `i`, root id `k` at
    /// `slot[rank + k]`.
    slot: Vec<Option<usize>>,
    cascade_s: CascadeSet,
    cascade_t: CascadeSet,
}

impl<'a> Seaweed<'a> {
    /// Builds `g_{S,T}`: basis `H_1..H_l`, then `X_a` for `a` in `R+^S`, then
    /// `X_{-b}` for `b` in `R+^T`, both in the fixed order.
    pub fn new(rs: &'a RootSystem, s: Subset, t: Subset) -> Result<Self> {
        let rank = rs.rank();
        let full = Subset::full(rank);
        if !s.is_subset_of(full) || !t.is_subset_of(full) {
            return Err(Error::InvalidSubset {
                literal: format!("{s} / {t}"),
                reason: format!("indices must lie in 1..={rank}"),
            });
        }
        let mut basis: Vec<GBasis> = (0..rank).map(GBasis::Cartan).collect();
        basis.extend(rs.positive_roots_in(s).into_iter().map(|k| GBasis::Root(RootId(k))));
        basis.extend(
            rs.positive_roots_in(t)
                .into_iter()
                .map(|k| GBasis::Root(rs.negate_id(RootId(k)))),
        );
        let mut slot = vec![None; rank + rs.num_roots()];
        for (pos, b) in basis.iter().enumerate() {
            slot[slot_key(rank, *b)] = Some(pos);
        }
        let q = Seaweed {
            rs,
            s,
            t,
            basis,
            slot,
            cascade_s: cascade(rs, s)?,
            cascade_t: cascade(rs, t)?,
        };
        q.check_closed()?;
        Ok(q)
    }

    fn check_closed(&self) -> Result<()> {
        let roots: Vec<RootId> = self.root_ids().collect();
        for &a in &roots {
            for &b in &roots {
                if let Some(c) = self.rs.sum_id(a, b) {
                    if self.position(GBasis::Root(c)).is_none() {
                        return Err(Error::Internal(format!(
                            "support of g_({},{}) is not closed",
                            self.s, self.t
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn root_ids(&self) -> impl Iterator<Item = RootId> + '_ {
        self.basis.iter().filter_map(|b| match b {
            GBasis::Root(id) => Some(*id),
            GBasis::Cartan(_) => None,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn s(&self) -> Subset {
        self.s
    }

    pub fn t(&self) -> Subset {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GBasis] {
        &self.basis
    }

    pub fn cascade_s(&self) -> &CascadeSet {
        &self.cascade_s
    }

    pub fn cascade_t(&self) -> &CascadeSet {
        &self.cascade_t
    }

    /// Position of a basis element of `g` in this seaweed's basis.
    pub fn position(&self, b: GBasis) -> Option<usize> {
        self.slot[slot_key(self.rs.rank(), b)]
    }

    /// Position of `X_r` for a (signed) root `r`.
    pub fn root_position(&self, r: &Root) -> Option<usize> {
        self.rs.id_of(r).and_then(|id| self.position(GBasis::Root(id)))
    }

    /// `m = |K(S)| + |K(T)|`, the length of a candidate coefficient tuple.
    pub fn m(&self) -> usize {
        self.cascade_s.len() + self.cascade_t.len()
    }

    /// `dim E_{S,T}`.
    pub fn dim_e(&self) -> usize {
        dim_span_epsilons(self.rs, &[&self.cascade_s, &self.cascade_t])
    }

    /// Number of cascade members shared by `K(S)` and `K(T)`.
    pub fn common_members(&self) -> usize {
        self.cascade_s
            .members
            .iter()
            .filter(|m| self.cascade_t.contains_subset(m.subset))
            .count()
    }
}

fn slot_key(rank: usize, b: GBasis) -> usize {
    match b {
        GBasis::Cartan(i) => i,
        GBasis::Root(id) => rank + id.0,
    }
}

/// A linear form on a seaweed, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearForm {
    pub coords: Vec<i64>,
}

impl LinearForm {
    pub fn zero(dim: usize) -> Self {
        LinearForm { coords: vec![0; dim] }
    }

    /// Dual basis vector of position `i`.
    pub fn dual(dim: usize, i: usize) -> Self {
        let mut f = Self::zero(dim);
        f.coords[i] = 1;
        f
    }

    /// Coordinates uniform in `[-COORD_BOUND, COORD_BOUND]`.
    pub fn random(dim: usize, rng: &mut impl Rng) -> Self {
        LinearForm {
            coords: (0..dim).map(|_| rng.gen_range(-COORD_BOUND..=COORD_BOUND)).collect(),
        }
    }
}

/// Matrix of `Phi_f` on the seaweed basis: `M[i][j] = f([e_i, e_j])`.
pub fn phi_matrix(q: &Seaweed, sc: &StructureConstants, f: &LinearForm) -> Result<Vec<Vec<i64>>> {
    let dim = q.dim();
    if f.coords.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: f.coords.len(),
        });
    }
    let mut m = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let mut v = 0i64;
            for (z, c) in sc.bracket(q.basis[i], q.basis[j]) {
                let pos = q.position(z).ok_or_else(|| {
                    Error::Internal(format!("bracket leaves g_({},{})", q.s, q.t))
                })?;
                v += c * f.coords[pos];
            }
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    Ok(m)
}

/// Exact rank of `Phi_f`.
pub fn phi_rank(q: &Seaweed, sc: &StructureConstants, f: &LinearForm) -> Result<usize> {
    let m = phi_matrix(q, sc, f)?;
    Ok(linalg::bareiss_rank(
        m.into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect(),
    ))
}

/// The random forms tried by [`generic_index`] for this seed, in order.
pub fn trial_forms(dim: usize, trials: usize, seed: u64) -> Vec<LinearForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| LinearForm::random(dim, &mut rng)).collect()
}

/// `dim q` minus the largest rank of `Phi_f` over `trials` random integer
/// forms. An upper bound on the index that is exact with overwhelming
/// probability.
pub fn generic_index(q: &Seaweed, sc: &StructureConstants, trials: usize, seed: u64) -> Result<usize> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut best = 0;
    for f in trial_forms(q.dim(), trials, seed) {
        best = best.max(phi_rank(q, sc, &f)?);
        if best == q.dim() {
            break;
        }
    }
    Ok(q.dim() - best)
}

/// `d_{S,T} = l + |K(S)| + |K(T)| - 2 dim E_{S,T}`.
pub fn d_bound(rs: &RootSystem, s: Subset, t: Subset) -> Result<usize> {
    let ks = cascade(rs, s)?;
    let kt = cascade(rs, t)?;
    let e = dim_span_epsilons(rs, &[&ks, &kt]) as i64;
    let d = rs.rank() as i64 + ks.len() as i64 + kt.len() as i64 - 2 * e;
    usize::try_from(d).map_err(|_| Error::Internal(format!("negative bound {d}")))
}

/// `f = sum a_K X*_{eps_K} + sum b_L X*_{-eps_L}`, coefficients in the order
/// of the `eps_K` then the `eps_L`.
pub fn candidate_form(q: &Seaweed, coefficients: &[i64]) -> Result<LinearForm> {
    if coefficients.len() != q.m() {
        return Err(Error::DimensionMismatch {
            expected: q.m(),
            got: coefficients.len(),
        });
    }
    if let Some(k) = coefficients.iter().position(|&c| c == 0) {
        return Err(Error::ZeroCoefficient(k));
    }
    let mut f = LinearForm::zero(q.dim());
    let targets = q
        .cascade_s
        .epsilons()
        .cloned()
        .chain(q.cascade_t.epsilons().map(Root::neg));
    for (eps, &c) in targets.zip(coefficients) {
        let pos = q
            .root_position(&eps)
            .ok_or_else(|| Error::Internal(format!("X_{eps} not in seaweed")))?;
        f.coords[pos] = c;
    }
    Ok(f)
}

/// Pair families attached to a seaweed and its two cascades.
#[derive(Clone, Debug, Default, Serialize)]
pub struct WitnessData {
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub h1: Vec<(Root, Root)>,
    pub h2: Vec<(Root, Root)>,
    pub i1: Vec<(Root, Root)>,
    pub i2: Vec<(Root, Root)>,
    pub j: Vec<(Root, Root)>,
}

impl WitnessData {
    /// `Z = H1 ∪ H2 ∪ I1 ∪ I2 ∪ J`.
    pub fn z(&self) -> impl Iterator<Item = &(Root, Root)> {
        self.h1
            .iter()
            .chain(&self.h2)
            .chain(&self.i1)
            .chain(&self.i2)
            .chain(&self.j)
    }
}

pub fn witness_quantities(q: &Seaweed) -> WitnessData {
    let rs = q.rs;
    let before = |a: &Root, b: &Root| rs.position(a) < rs.position(b);
    let ks = &q.cascade_s;
    let kt = &q.cascade_t;
    let is_eps_s = |r: &Root| ks.member_with_epsilon(r).is_some();
    let is_neg_eps_t = |r: &Root| kt.member_with_epsilon(&r.neg()).is_some();

    let mut w = WitnessData {
        m: q.m(),
        s: q.dim_e(),
        ..Default::default()
    };
    for k in &ks.members {
        for a in &k.gamma0 {
            let b = k.epsilon.sub(a);
            if before(a, &b) {
                w.h1.push((a.clone(), b));
            }
        }
    }
    for l in &kt.members {
        for b in &l.gamma0 {
            let rest = l.epsilon.sub(b);
            if before(b, &rest) {
                w.h2.push((b.neg(), rest.neg()));
            }
        }
    }
    for k in &ks.members {
        for l in &kt.members {
            for b in &l.gamma0 {
                if is_neg_eps_t(&k.epsilon.sub(b)) {
                    w.i1.push((b.neg(), k.epsilon.clone()));
                }
            }
            for a in &k.gamma0 {
                // The candidate form only sees X_{eps_K'} for K' in K(S).
                if is_eps_s(&a.sub(&l.epsilon)) {
                    w.i2.push((a.clone(), l.epsilon.neg()));
                }
            }
            for a in &k.gamma0 {
                for b in &l.gamma0 {
                    let diff = a.sub(b);
                    if is_eps_s(&diff) || is_neg_eps_t(&diff) {
                        w.j.push((a.clone(), b.neg()));
                    }
                }
            }
        }
    }
    w.r = w.h1.len() + w.h2.len();
    w
}

/// `m` nonzero coefficients in `[-COORD_BOUND, COORD_BOUND]`.
pub fn random_omega(m: usize, rng: &mut impl Rng) -> Vec<i64> {
    (0..m)
        .map(|_| loop {
            let c = rng.gen_range(-COORD_BOUND..=COORD_BOUND);
            if c != 0 {
                break c;
            }
        })
        .collect()
}

/// Whether `rank Phi_f >= 2(r + s)` at the candidate form defined by `omega`.
/// On failure one fresh seeded tuple is tried before reporting `false`.
pub fn check_rank_bound(q: &Seaweed, sc: &StructureConstants, omega: &[i64], seed: u64) -> Result<bool> {
    let w = witness_quantities(q);
    let needed = 2 * (w.r + w.s);
    if phi_rank(q, sc, &candidate_form(q, omega)?)? >= needed {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let retry = random_omega(q.m(), &mut rng);
    Ok(phi_rank(q, sc, &candidate_form(q, &retry)?)? >= needed)
}

/// Rational basis of the kernel of `Phi_f`.
pub fn kernel_basis(q: &Seaweed, sc: &StructureConstants, f: &LinearForm) -> Result<Vec<Vec<BigRational>>> {
    let m = phi_matrix(q, sc, f)?;
    Ok(linalg::nullspace(&m, q.dim()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub chi: usize,
    pub d: usize,
    pub bound_ok: bool,
    pub equality: bool,
}

/// Index and bound for one pair `(S, T)`.
pub fn verify_pair(
    rs: &RootSystem,
    sc: &StructureConstants,
    s: Subset,
    t: Subset,
    trials: usize,
    seed: u64,
) -> Result<PairReport> {
    let q = Seaweed::new(rs, s, t)?;
    let chi = generic_index(&q, sc, trials, seed)?;
    let d = d_bound(rs, s, t)?;
    Ok(PairReport {
        chi,
        d,
        bound_ok: chi <= d,
        equality: chi == d,
    })
}
