//! The cascade of strongly orthogonal roots attached to a set of simple roots.
//!
//! For connected `S` the cascade is `{S}` together with the cascade of the
//! simple roots of `S` orthogonal to the highest root `eps_S`; for disconnected
//! `S` it is the union over the connected components.

use serde::Serialize;

use crate::error::Result;
use crate::linalg;
use crate::rootsys::{Root, RootSystem, Subset};

/// One member `K` of a cascade with its highest root and Heisenberg layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeMember {
    pub subset: Subset,
    pub epsilon: Root,
    /// Positive roots of `R^K` with positive pairing against `eps_K^vee`, in
    /// the fixed order. Contains `epsilon` (last).
    pub gamma: Vec<Root>,
    /// `gamma` without `epsilon`.
    pub gamma0: Vec<Root>,
    pub n_pairs: usize,
}

impl CascadeMember {
    fn new(rs: &RootSystem, subset: Subset) -> Result<Self> {
        let epsilon = rs.highest_root(subset)?;
        let gamma: Vec<Root> = rs
            .positive_roots_in(subset)
            .into_iter()
            .map(|k| rs.positive_roots()[k].clone())
            .filter(|a| rs.pairing_coeffs(a.coeffs(), epsilon.coeffs()) > 0)
            .collect();
        let gamma0: Vec<Root> = gamma.iter().filter(|a| **a != epsilon).cloned().collect();
        let n_pairs = gamma0.len() / 2;
        Ok(CascadeMember {
            subset,
            epsilon,
            gamma,
            gamma0,
            n_pairs,
        })
    }

    pub fn in_gamma0(&self, r: &Root) -> bool {
        self.gamma0.contains(r)
    }
}

/// `K(S)`, members ordered by the position of `eps_K` in the fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeSet {
    pub source: Subset,
    pub members: Vec<CascadeMember>,
}

impl CascadeSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn epsilons(&self) -> impl Iterator<Item = &Root> {
        self.members.iter().map(|m| &m.epsilon)
    }

    pub fn contains_subset(&self, k: Subset) -> bool {
        self.members.iter().any(|m| m.subset == k)
    }

    /// Member whose highest root equals `r`.
    pub fn member_with_epsilon(&self, r: &Root) -> Option<&CascadeMember> {
        self.members.iter().find(|m| &m.epsilon == r)
    }

    pub fn subsets(&self) -> Vec<Subset> {
        self.members.iter().map(|m| m.subset).collect()
    }
}

#[derive(Serialize)]
pub struct CascadeMemberRecord {
    pub subset: Subset,
    pub epsilon_coeffs: Root,
    pub gamma_size: usize,
}

impl From<&CascadeMember> for CascadeMemberRecord {
    fn from(m: &CascadeMember) -> Self {
        CascadeMemberRecord {
            subset: m.subset,
            epsilon_coeffs: m.epsilon.clone(),
            gamma_size: m.gamma.len(),
        }
    }
}

/// Simple roots of a connected `k` orthogonal to `eps_K^vee`.
fn orthogonal_part(rs: &RootSystem, k: Subset, epsilon: &Root) -> Subset {
    let mut out = Subset::empty();
    for i in k.indices() {
        if rs.pairing_coeffs(Root::simple(rs.rank(), i).coeffs(), epsilon.coeffs()) == 0 {
            out.insert(i);
        }
    }
    out
}

fn collect(rs: &RootSystem, s: Subset, out: &mut Vec<CascadeMember>) -> Result<()> {
    for comp in rs.connected_components(s) {
        let member = CascadeMember::new(rs, comp)?;
        let rest = orthogonal_part(rs, comp, &member.epsilon);
        out.push(member);
        // `rest` excludes at least the roots of comp not orthogonal to eps.
        collect(rs, rest, out)?;
    }
    Ok(())
}

pub fn cascade(rs: &RootSystem, s: Subset) -> Result<CascadeSet> {
    let mut members = Vec::new();
    collect(rs, s, &mut members)?;
    members.sort_by_key(|m| rs.position(&m.epsilon).expect("epsilon is a positive root"));
    Ok(CascadeSet { source: s, members })
}

/// `k_g = |K(Pi)|`.
pub fn kg(rs: &RootSystem) -> Result<usize> {
    Ok(cascade(rs, Subset::full(rs.rank()))?.len())
}

/// Dimension of the span of all `eps_K` over the given cascades.
pub fn dim_span_epsilons(rs: &RootSystem, sets: &[&CascadeSet]) -> usize {
    let rows: Vec<Vec<i64>> = sets
        .iter()
        .flat_map(|c| c.epsilons())
        .map(|e| e.coeffs().iter().map(|&x| x as i64).collect())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    debug_assert!(rows.iter().all(|r| r.len() == rs.rank()));
    linalg::rank_i64(&rows)
}

/// Chain `S_1 ⊂ ... ⊂ S_n = S` with `K(S_1) ⊂ ... ⊂ K(S_n)` and `|K(S_i)| = i`,
/// obtained by repeatedly removing `K \ K'` for the least-indexed component `K`.
pub fn cascade_chain(rs: &RootSystem, s: Subset) -> Result<Vec<Subset>> {
    let mut chain = Vec::new();
    let mut current = s;
    while !current.is_empty() {
        chain.push(current);
        let k = rs.connected_components(current)[0];
        let eps = rs.highest_root(k)?;
        let k_prime = orthogonal_part(rs, k, &eps);
        current = current.difference(k.difference(k_prime));
    }
    chain.reverse();
    Ok(chain)
}
