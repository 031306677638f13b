//! Reduced irreducible root systems in the simple-root basis.
//!
//! Roots are generated from the Cartan matrix by closure under addition of
//! simple roots (string rule), so every type goes through the same code path.
//! Simple roots follow Bourbaki's numbering, 1-based at the API surface.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            TypeLetter::A => rank >= 1,
            TypeLetter::B => rank >= 2,
            TypeLetter::C => rank >= 3,
            TypeLetter::D => rank >= 4,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        }
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// A simple type together with its rank, e.g. `B4`.
///
/// Ranks are restricted to the non-overlapping ranges A1+, B2+, C3+, D4+,
/// E6-E8, F4, G2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    letter: TypeLetter,
    rank: usize,
}

/// Largest rank the crate supports; subsets are stored as `u32` bitsets and
/// E8 is the largest exceptional type.
pub const MAX_RANK: usize = 16;

impl SimpleType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        if !letter.admits(rank) || rank > MAX_RANK {
            return Err(Error::InvalidRank {
                letter: letter.as_char(),
                rank,
            });
        }
        Ok(SimpleType { letter, rank })
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, ordered by letter then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        use TypeLetter::*;
        let mut out = Vec::new();
        for letter in [A, B, C, D, E, F, G] {
            for rank in 1..=max_rank.min(MAX_RANK) {
                if letter.admits(rank) {
                    out.push(SimpleType { letter, rank });
                }
            }
        }
        out
    }

    /// Number of positive roots by the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.letter {
            TypeLetter::A => l * (l + 1) / 2,
            TypeLetter::B | TypeLetter::C => l * l,
            TypeLetter::D => l * (l - 1),
            TypeLetter::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            TypeLetter::F => 24,
            TypeLetter::G => 6,
        }
    }

    /// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee>` in Bourbaki numbering.
    fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let l = self.rank;
        let mut a = vec![vec![0i32; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // (i, j, <alpha_i, alpha_j^vee>, <alpha_j, alpha_i^vee>), 1-based.
        let mut edges: Vec<(usize, usize, i32, i32)> = Vec::new();
        match self.letter {
            TypeLetter::A => {
                for i in 1..l {
                    edges.push((i, i + 1, -1, -1));
                }
            }
            TypeLetter::B => {
                for i in 1..l - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                edges.push((l - 1, l, -2, -1));
            }
            TypeLetter::C => {
                for i in 1..l - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                edges.push((l - 1, l, -1, -2));
            }
            TypeLetter::D => {
                for i in 1..l - 1 {
                    edges.push((i, i + 1, -1, -1));
                }
                edges.push((l - 2, l, -1, -1));
            }
            TypeLetter::E => {
                edges.push((1, 3, -1, -1));
                edges.push((2, 4, -1, -1));
                for i in 3..l {
                    edges.push((i, i + 1, -1, -1));
                }
            }
            TypeLetter::F => {
                edges.push((1, 2, -1, -1));
                edges.push((2, 3, -2, -1));
                edges.push((3, 4, -1, -1));
            }
            TypeLetter::G => {
                edges.push((1, 2, -1, -3));
            }
        }
        for (i, j, aij, aji) in edges {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `"B4"`, `"b4"` or `"E_8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter: TypeLetter = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?
            .to_string()
            .parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        SimpleType::new(letter, rank)
    }
}

/// A set of simple roots, stored as a bitset (bit `i - 1` is `alpha_i`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(rank: usize) -> Self {
        Subset(((1u64 << rank) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Builds a subset from 1-based indices. Panics on index 0.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &i in indices {
            assert!((1..=MAX_RANK).contains(&i), "simple root index {i} out of range");
            bits |= 1 << (i - 1);
        }
        Subset(bits)
    }

    pub fn singleton(i: usize) -> Self {
        Subset::from_indices(&[i])
    }

    /// Parses `"1,3,4"`, `"none"` or the empty string; every index must be in `1..=rank`.
    pub fn parse(literal: &str, rank: usize) -> Result<Self> {
        let trimmed = literal.trim();
        if trimmed.is_empty() || trimmed.eq_ignore_ascii_case("none") {
            return Ok(Subset::empty());
        }
        let mut bits = 0u32;
        for part in trimmed.split(',') {
            let part = part.trim();
            let i: usize = part.parse().map_err(|_| Error::InvalidSubset {
                literal: literal.to_string(),
                reason: format!("`{part}` is not a positive integer"),
            })?;
            if i == 0 || i > rank {
                return Err(Error::InvalidSubset {
                    literal: literal.to_string(),
                    reason: format!("index {i} outside 1..={rank}"),
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Subset(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    /// Least 1-based index, if any.
    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

/// A root written over the simple roots. Coefficients are all `>= 0` for a
/// positive root and all `<= 0` for a negative one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The simple root `alpha_i` (1-based) of a rank-`rank` system.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Simple roots with nonzero coefficient.
    pub fn support(&self) -> Subset {
        let mut s = Subset::empty();
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                s.insert(i + 1);
            }
        }
        s
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Index into the full root list of a [`RootSystem`]: `0..N` are the positive
/// roots in the fixed order, `N..2N` their negatives in the same order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// Immutable catalog of a root system: Cartan matrix, symmetric form,
/// ordered positive roots and an addition table over all roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i32>>,
    form: Vec<Vec<i32>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    /// `sums[a * 2N + b]` is the id of root a + root b, if it is a root.
    sums: Vec<Option<RootId>>,
}

impl RootSystem {
    pub fn new(simple_type: SimpleType) -> Result<Self> {
        let l = simple_type.rank();
        let cartan = simple_type.cartan_matrix();
        let form = symmetric_form(&cartan)?;

        let mut positive: Vec<Root> = (1..=l).map(|i| Root::simple(l, i)).collect();
        let mut known: HashMap<Vec<i32>, ()> =
            positive.iter().map(|r| (r.coeffs().to_vec(), ())).collect();
        let mut layer: Vec<Root> = positive.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..l {
                    let mut up = beta.coeffs().to_vec();
                    up[i] += 1;
                    if known.contains_key(&up) {
                        continue;
                    }
                    // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                    // with p - q = <beta, alpha_i^vee>.
                    let mut p = 0;
                    let mut down = beta.coeffs().to_vec();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !known.contains_key(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let pair: i32 = (0..l).map(|j| beta.coeffs()[j] * cartan[j][i]).sum();
                    if p - pair > 0 {
                        known.insert(up.clone(), ());
                        next.push(Root(up));
                    }
                }
            }
            positive.extend(next.iter().cloned());
            layer = next;
        }

        positive.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coeffs().cmp(a.coeffs()))
        });
        if positive.len() != simple_type.positive_root_count() {
            return Err(Error::Internal(format!(
                "{simple_type}: generated {} positive roots, expected {}",
                positive.len(),
                simple_type.positive_root_count()
            )));
        }

        let index: HashMap<Vec<i32>, usize> = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs().to_vec(), k))
            .collect();

        let mut rs = RootSystem {
            simple_type,
            cartan,
            form,
            positive,
            index,
            sums: Vec::new(),
        };
        let total = 2 * rs.num_positive();
        let mut sums = vec![None; total * total];
        for a in 0..total {
            let ra = rs.root(RootId(a));
            for b in 0..total {
                sums[a * total + b] = rs.id_of(&ra.add(&rs.root(RootId(b))));
            }
        }
        rs.sums = sums;
        Ok(rs)
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    /// `cartan()[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Gram matrix of the simple roots, short roots of squared length 2.
    pub fn symmetric_form(&self) -> &[Vec<i32>] {
        &self.form
    }

    /// Positive roots sorted by height, then by decreasing coefficient vector.
    /// This is the fixed total order on positive roots used everywhere.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn root(&self, id: RootId) -> Root {
        let n = self.num_positive();
        if id.0 < n {
            self.positive[id.0].clone()
        } else {
            self.positive[id.0 - n].neg()
        }
    }

    pub fn id_of(&self, r: &Root) -> Option<RootId> {
        self.id_of_coeffs(r.coeffs())
    }

    pub fn id_of_coeffs(&self, c: &[i32]) -> Option<RootId> {
        if let Some(&k) = self.index.get(c) {
            return Some(RootId(k));
        }
        let neg: Vec<i32> = c.iter().map(|x| -x).collect();
        self.index
            .get(&neg)
            .map(|&k| RootId(k + self.num_positive()))
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.id_of(r).is_some()
    }

    pub fn is_positive_id(&self, id: RootId) -> bool {
        id.0 < self.num_positive()
    }

    pub fn negate_id(&self, id: RootId) -> RootId {
        let n = self.num_positive();
        if id.0 < n {
            RootId(id.0 + n)
        } else {
            RootId(id.0 - n)
        }
    }

    /// Id of the sum of two roots, when it is a root.
    pub fn sum_id(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a.0 * self.num_roots() + b.0]
    }

    /// Position of a positive root in the fixed order.
    pub fn position(&self, r: &Root) -> Option<usize> {
        self.index.get(r.coeffs()).copied()
    }

    /// Symmetric bilinear form on coefficient vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let l = self.rank();
        let mut acc = 0;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                acc += a[i] * self.form[i][j] * b[j];
            }
        }
        acc
    }

    /// `<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, lam: &Root, alpha: &Root) -> Result<i32> {
        if lam.coeffs().len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: lam.coeffs().len(),
            });
        }
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.coeffs().to_vec()));
        }
        Ok(self.pairing_coeffs(lam.coeffs(), alpha.coeffs()))
    }

    pub(crate) fn pairing_coeffs(&self, lam: &[i32], alpha: &[i32]) -> i32 {
        let num = 2 * self.inner(lam, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Coefficients of the coroot `h_alpha` over the simple coroots `h_1..h_l`.
    pub fn coroot_coeffs(&self, alpha: &Root) -> Vec<i32> {
        let len = self.inner(alpha.coeffs(), alpha.coeffs());
        alpha
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, &k)| k * self.form[i][i] / len)
            .collect()
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    /// Dynkin-connected components of `s`, ordered by least index.
    pub fn connected_components(&self, s: Subset) -> Vec<Subset> {
        let mut remaining = s;
        let mut out = Vec::new();
        while let Some(start) = remaining.min_index() {
            let mut comp = Subset::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in remaining.indices() {
                    if !comp.contains(w) && self.adjacent(v, w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, s: Subset) -> bool {
        self.connected_components(s).len() == 1
    }

    /// Positions of the positive roots of `R^S`, in the fixed order.
    pub fn positive_roots_in(&self, s: Subset) -> Vec<usize> {
        self.positive
            .iter()
            .enumerate()
            .filter(|(_, r)| r.support().is_subset_of(s))
            .map(|(k, _)| k)
            .collect()
    }

    /// Highest root of the irreducible subsystem generated by a connected `s`.
    pub fn highest_root(&self, s: Subset) -> Result<Root> {
        if s.is_empty() || !self.is_connected(s) {
            return Err(Error::NotConnected(s.to_string()));
        }
        let inside = self.positive_roots_in(s);
        // Sorted by height, so the last root is the highest; it must be unique.
        let top = &self.positive[*inside.last().expect("nonempty")];
        let ties = inside
            .iter()
            .filter(|&&k| self.positive[k].height() == top.height())
            .count();
        if ties != 1 || top.support() != s {
            return Err(Error::Internal(format!(
                "no unique highest root for {s} in {}",
                self.simple_type
            )));
        }
        for &k in &inside {
            let alpha = &self.positive[k];
            if alpha != top {
                let p = self.pairing_coeffs(alpha.coeffs(), top.coeffs());
                if !(0..=1).contains(&p) {
                    return Err(Error::Internal(format!(
                        "<{alpha}, {top}^vee> = {p} for {s} in {}",
                        self.simple_type
                    )));
                }
            }
        }
        Ok(top.clone())
    }

    /// True iff `a != +-b` and neither `a + b` nor `a - b` is a root.
    pub fn strongly_orthogonal(&self, a: &Root, b: &Root) -> bool {
        if a == b || *a == b.neg() {
            return false;
        }
        !self.is_root(&a.add(b)) && !self.is_root(&a.sub(b))
    }
}

/// Symmetrized Cartan matrix `(alpha_i, alpha_j) = a_ij d_j`, with the
/// half-lengths `d_j` scaled so the shortest simple root has `d = 1`.
fn symmetric_form(cartan: &[Vec<i32>]) -> Result<Vec<Vec<i32>>> {
    let l = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; l];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // a_ij d_j = a_ji d_i
                d[j] = Some(di * Ratio::from_integer(cartan[j][i] as i64)
                    / Ratio::from_integer(cartan[i][j] as i64));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Internal("disconnected Dynkin diagram".into())))
        .collect::<Result<_>>()?;
    let min = *d.iter().min().expect("rank >= 1");
    let d: Vec<i32> = d
        .iter()
        .map(|x| {
            let v = x / min;
            if v.is_integer() {
                Ok(v.to_integer() as i32)
            } else {
                Err(Error::Internal("non-integral symmetrizer".into()))
            }
        })
        .collect::<Result<_>>()?;
    let mut form = vec![vec![0; l]; l];
    for i in 0..l {
        for j in 0..l {
            form[i][j] = cartan[i][j] * d[j];
        }
    }
    for i in 0..l {
        for j in 0..l {
            if form[i][j] != form[j][i] {
                return Err(Error::Internal("Cartan matrix is not symmetrizable".into()));
            }
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn a2_positive_roots() {
        let a2 = rs("A2");
        assert_eq!(a2.positive_roots(), &[r(&[1, 0]), r(&[0, 1]), r(&[1, 1])]);
    }

    #[test]
    fn b2_and_g2_closure() {
        let b2 = rs("B2");
        let mut got: Vec<_> = b2.positive_roots().to_vec();
        got.sort();
        let mut want = vec![r(&[1, 0]), r(&[0, 1]), r(&[1, 1]), r(&[1, 2])];
        want.sort();
        assert_eq!(got, want);

        let g2 = rs("G2");
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.positive_roots().last().unwrap(), &r(&[3, 2]));
    }

    #[test]
    fn all_counts_match_classical_formulas() {
        for t in SimpleType::all_up_to(8) {
            // RootSystem::new errors on a count mismatch.
            let sys = RootSystem::new(t).unwrap();
            assert_eq!(sys.num_positive(), t.positive_root_count(), "{t}");
            for (i, row) in sys.cartan().iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &a) in row.iter().enumerate() {
                    if i != j {
                        assert!((-3..=0).contains(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn short_roots_have_squared_length_two() {
        for t in SimpleType::all_up_to(8) {
            let sys = rs(&t.to_string());
            let min = sys
                .positive_roots()
                .iter()
                .map(|a| sys.inner(a.coeffs(), a.coeffs()))
                .min()
                .unwrap();
            assert_eq!(min, 2, "{t}");
        }
    }

    #[test]
    fn pairing_examples() {
        let a3 = rs("A3");
        let theta = r(&[1, 1, 1]);
        assert_eq!(a3.pairing(&theta, &theta).unwrap(), 2);
        assert_eq!(a3.pairing(&r(&[0, 1, 0]), &theta).unwrap(), 0);
        let a2 = rs("A2");
        assert_eq!(a2.pairing(&r(&[1, 0]), &r(&[0, 1])).unwrap(), -1);
        assert!(matches!(
            a2.pairing(&r(&[1, 0]), &r(&[2, 0])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn highest_root_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.highest_root(Subset::full(2)).unwrap(), r(&[1, 1]));
        let b2 = rs("B2");
        assert_eq!(b2.highest_root(Subset::full(2)).unwrap(), r(&[1, 2]));
        let e8 = rs("E8");
        assert_eq!(
            e8.highest_root(Subset::singleton(5)).unwrap(),
            Root::simple(8, 5)
        );
        assert!(b2.highest_root(Subset::empty()).is_err());
        let a3 = rs("A3");
        assert!(matches!(
            a3.highest_root(Subset::from_indices(&[1, 3])),
            Err(Error::NotConnected(_))
        ));
    }

    #[test]
    fn components() {
        let a3 = rs("A3");
        assert_eq!(
            a3.connected_components(Subset::from_indices(&[1, 3])),
            vec![Subset::singleton(1), Subset::singleton(3)]
        );
        assert!(a3.connected_components(Subset::empty()).is_empty());
        let a4 = rs("A4");
        assert_eq!(
            a4.connected_components(Subset::from_indices(&[1, 2, 4])),
            vec![Subset::from_indices(&[1, 2]), Subset::singleton(4)]
        );
        let d4 = rs("D4");
        assert_eq!(d4.connected_components(Subset::from_indices(&[1, 3, 4])).len(), 3);
        assert_eq!(d4.connected_components(Subset::from_indices(&[1, 2, 4])).len(), 1);
    }

    #[test]
    fn strong_orthogonality_examples() {
        let a3 = rs("A3");
        assert!(a3.strongly_orthogonal(&r(&[1, 1, 1]), &r(&[0, 1, 0])));
        let a2 = rs("A2");
        assert!(!a2.strongly_orthogonal(&r(&[1, 0]), &r(&[0, 1])));
        assert!(!a2.strongly_orthogonal(&r(&[1, 0]), &r(&[1, 0])));
        assert!(!a2.strongly_orthogonal(&r(&[1, 0]), &r(&[-1, 0])));
    }

    #[test]
    fn subset_literals() {
        assert_eq!(Subset::parse("1,3,4", 4).unwrap(), Subset::from_indices(&[1, 3, 4]));
        assert_eq!(Subset::parse("none", 4).unwrap(), Subset::empty());
        assert!(Subset::parse("0", 4).is_err());
        assert!(Subset::parse("5", 4).is_err());
        assert!(Subset::parse("x", 4).is_err());
        assert_eq!(Subset::from_indices(&[2, 4]).to_string(), "2,4");
    }

    #[test]
    fn type_parsing_and_ranges() {
        assert!("C2".parse::<SimpleType>().is_err());
        assert!("D3".parse::<SimpleType>().is_err());
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("F3".parse::<SimpleType>().is_err());
        assert_eq!("e_7".parse::<SimpleType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn addition_table_is_symmetric() {
        for t in ["A4", "B3", "G2", "F4"] {
            let sys = rs(t);
            let n = sys.num_roots();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(
                        sys.sum_id(RootId(a), RootId(b)),
                        sys.sum_id(RootId(b), RootId(a))
                    );
                }
            }
        }
    }
}
