//! Structural properties of cascades, witness sets and the index.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seaweed_core::enumerate::{all_pairs, pair_seed, verify_pairs};
use seaweed_core::linalg::{apply, is_zero_vector, nullspace};
use seaweed_core::seaweed::{random_omega, DEFAULT_TRIALS};
use seaweed_core::*;

const SMALL: [&str; 11] = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4"];

fn rs(name: &str) -> RootSystem {
    RootSystem::new(name.parse().unwrap()).unwrap()
}

fn sub_cascades(r: &RootSystem) -> Vec<CascadeSet> {
    (0..1u32 << r.rank())
        .map(|b| cascade(r, Subset::from_bits(b)).unwrap())
        .collect()
}

#[test]
fn cascade_layers_are_heisenberg() {
    for t in SimpleType::all_up_to(6) {
        let r = RootSystem::new(t).unwrap();
        let sc = StructureConstants::new(&r).unwrap();
        for k in cascade(&r, Subset::full(t.rank())).unwrap().members {
            let eps = &k.epsilon;
            let eps_id = r.id_of(eps).unwrap();
            assert_eq!(k.gamma0.len(), 2 * k.n_pairs, "{t}");
            for a in &k.gamma0 {
                // <a, eps^vee> = 1 and eps - a is the partner in the layer.
                assert_eq!(r.pairing(a, eps).unwrap(), 1, "{t} {a}");
                let partner = eps.sub(a);
                assert!(k.in_gamma0(&partner), "{t} {a}");
                let (ia, ib) = (r.id_of(a).unwrap(), r.id_of(&partner).unwrap());
                assert_eq!(r.sum_id(ia, ib), Some(eps_id));
                assert_ne!(sc.n(ia, ib), 0);
                // Everything else in the layer commutes.
                for b in &k.gamma0 {
                    if *b != partner {
                        assert!(!r.is_root(&a.add(b)), "{t} {a} + {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn cascade_size_is_dim_of_epsilon_span() {
    for name in ["A5", "B4", "C4", "D5", "E6", "F4", "G2"] {
        let r = rs(name);
        let cascades = sub_cascades(&r);
        for k in &cascades {
            assert_eq!(k.len(), dim_span_epsilons(&r, &[k]), "{name} {}", k.source);
        }
        // The two expressions of d agree.
        for (s, t) in all_pairs(r.rank()).into_iter().step_by(7) {
            let (ks, kt) = (&cascades[s.bits() as usize], &cascades[t.bits() as usize]);
            let alt = r.rank() as i64 + dim_span_epsilons(&r, &[ks]) as i64 + dim_span_epsilons(&r, &[kt]) as i64
                - 2 * dim_span_epsilons(&r, &[ks, kt]) as i64;
            assert_eq!(d_bound(&r, s, t).unwrap() as i64, alt, "{name} ({s},{t})");
        }
    }
}

/// Is there a member of `k` whose layer holds `inner` and which strictly
/// contains the member whose highest root is `eps`?
fn strictly_above(k: &CascadeSet, eps: &Root, inner: &[&Root]) -> bool {
    let Some(lower) = k.member_with_epsilon(eps) else {
        return false;
    };
    k.members.iter().any(|m| {
        lower.subset.is_subset_of(m.subset) && lower.subset != m.subset && inner.iter().all(|x| m.in_gamma0(x))
    })
}

#[test]
fn witness_pairs_are_detected_by_the_candidate_form() {
    for name in SMALL {
        let r = rs(name);
        let sc = StructureConstants::new(&r).unwrap();
        for (s, t) in all_pairs(r.rank()) {
            let q = Seaweed::new(&r, s, t).unwrap();
            let w = witness_quantities(&q);
            let ks = q.cascade_s();
            let kt = q.cascade_t();
            let n_total: usize = ks.members.iter().chain(&kt.members).map(|m| m.n_pairs).sum();
            assert_eq!(w.r, n_total, "{name} ({s},{t})");
            assert_eq!(w.r, w.h1.len() + w.h2.len());

            let f = candidate_form(&q, &vec![1; q.m()]).unwrap();
            let phi = phi_matrix(&q, &sc, &f).unwrap();
            for (a, b) in w.z() {
                let (i, j) = (q.root_position(a).unwrap(), q.root_position(b).unwrap());
                let sum = a.add(b);
                assert!(
                    ks.member_with_epsilon(&sum).is_some() || kt.member_with_epsilon(&sum.neg()).is_some(),
                    "{name} ({s},{t}): {a} + {b}"
                );
                assert_ne!(phi[i][j], 0, "{name} ({s},{t}): lambda at ({a}, {b})");
            }
            for (mb, eps_k) in &w.i1 {
                let b = mb.neg();
                let eps_l = b.sub(eps_k);
                assert!(strictly_above(kt, &eps_l, &[&b, eps_k]), "{name} ({s},{t}) I1");
            }
            for (a, meps_l) in &w.i2 {
                let eps_l = meps_l.neg();
                let eps_k = a.sub(&eps_l);
                assert!(strictly_above(ks, &eps_k, &[a, &eps_l]), "{name} ({s},{t}) I2");
            }
            for (a, mb) in &w.j {
                let b = mb.neg();
                let diff = a.sub(&b);
                let ok = strictly_above(ks, &diff, &[a, &b]) || strictly_above(kt, &diff.neg(), &[a, &b]);
                assert!(ok, "{name} ({s},{t}) J: {a}, {b}");
            }
        }
    }
}

/// Cartan elements killed by every eps_M lie in the kernel of Phi_f for any
/// candidate form f.
#[test]
fn toral_part_of_the_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["B3", "C3", "A4", "D4", "F4"] {
        let r = rs(name);
        let sc = StructureConstants::new(&r).unwrap();
        let l = r.rank();
        for (s, t) in all_pairs(l).into_iter().step_by(5) {
            let q = Seaweed::new(&r, s, t).unwrap();
            // eps(h_i) = <eps, alpha_i^vee>.
            let rows: Vec<Vec<i64>> = q
                .cascade_s()
                .epsilons()
                .chain(q.cascade_t().epsilons())
                .map(|e| (0..l).map(|i| r.pairing(e, &Root::simple(l, i + 1)).unwrap() as i64).collect())
                .collect();
            let toral = if rows.is_empty() {
                (0..l)
                    .map(|i| {
                        let mut v = vec![BigRational::zero(); l];
                        v[i] = BigRational::from_integer(1.into());
                        v
                    })
                    .collect()
            } else {
                nullspace(&rows, l)
            };
            assert_eq!(toral.len(), l - q.dim_e(), "{name} ({s},{t})");

            let f = candidate_form(&q, &random_omega(q.m(), &mut rng)).unwrap();
            let phi = phi_matrix(&q, &sc, &f).unwrap();
            for h in &toral {
                let mut v = vec![BigRational::zero(); q.dim()];
                for (i, c) in h.iter().enumerate() {
                    v[q.position(GBasis::Cartan(i)).unwrap()] = c.clone();
                }
                assert!(is_zero_vector(&apply(&phi, &v)), "{name} ({s},{t})");
            }
            let kernel = kernel_basis(&q, &sc, &f).unwrap();
            assert!(kernel.len() >= toral.len());
            let chi = generic_index(&q, &sc, DEFAULT_TRIALS, pair_seed(1, s, t)).unwrap();
            assert!(chi <= kernel.len(), "{name} ({s},{t})");
        }
    }
}

#[test]
fn epsilon_basis_gives_index_zero() {
    let mut hits = 0;
    for name in ["A3", "B3", "C3", "A4", "B4", "C4", "D4", "G2", "F4"] {
        let r = rs(name);
        let sc = StructureConstants::new(&r).unwrap();
        let cascades = sub_cascades(&r);
        let mut pairs = Vec::new();
        for (s, t) in all_pairs(r.rank()) {
            let (ks, kt) = (&cascades[s.bits() as usize], &cascades[t.bits() as usize]);
            // The family counted with multiplicity: a member shared by both
            // cascades adds one to the index (see the B3 case below).
            if ks.len() + kt.len() == r.rank() && dim_span_epsilons(&r, &[ks, kt]) == r.rank() {
                pairs.push((s, t));
            }
        }
        hits += pairs.len();
        for rec in verify_pairs(&r, &sc, &pairs, DEFAULT_TRIALS, 11).unwrap() {
            assert_eq!(rec.chi, 0, "{name} ({},{})", rec.s, rec.t);
        }
    }
    assert!(hits > 0);
}

#[test]
fn shared_cascade_member_keeps_index_positive() {
    let r = rs("B3");
    let sc = StructureConstants::new(&r).unwrap();
    let (s, t) = (Subset::singleton(1), Subset::full(3));
    let q = Seaweed::new(&r, s, t).unwrap();
    // The distinct eps_M form a basis, but {alpha_1} lies in both cascades.
    assert_eq!(q.dim_e(), 3);
    assert_eq!(q.common_members(), 1);
    assert_eq!(generic_index(&q, &sc, DEFAULT_TRIALS, 0).unwrap(), 1);
    assert_eq!(d_bound(&r, s, t).unwrap(), 1);
}

/// Pairs with nested cascades, independent epsilons, or a singleton side.
fn index_is_known(r: &RootSystem, cascades: &[CascadeSet], s: Subset, t: Subset) -> bool {
    let (ks, kt) = (&cascades[s.bits() as usize], &cascades[t.bits() as usize]);
    let nested = |a: &CascadeSet, b: &CascadeSet| a.subsets().iter().all(|&k| b.contains_subset(k));
    nested(ks, kt)
        || nested(kt, ks)
        || dim_span_epsilons(r, &[ks, kt]) == ks.len() + kt.len()
        || s.len() == 1
        || t.len() == 1
}

#[test]
fn index_equals_bound_in_the_known_cases() {
    for name in ["A5", "B5", "C5", "D5", "A6"] {
        let r = rs(name);
        let sc = StructureConstants::new(&r).unwrap();
        let cascades = sub_cascades(&r);
        let pairs: Vec<_> = all_pairs(r.rank())
            .into_iter()
            .filter(|&(s, t)| index_is_known(&r, &cascades, s, t))
            .step_by(3)
            .collect();
        assert!(!pairs.is_empty());
        for rec in verify_pairs(&r, &sc, &pairs, DEFAULT_TRIALS, 5).unwrap() {
            assert_eq!(rec.chi, rec.d, "{name} ({},{})", rec.s, rec.t);
        }
    }
}

#[test]
fn sampled_pairs_in_rank_six() {
    for name in ["A6", "B6", "C6", "D6", "E6"] {
        let r = rs(name);
        let sc = StructureConstants::new(&r).unwrap();
        let (pairs, sampled) = seaweed_core::enumerate::select_pairs(r.rank(), Some(40), 99);
        assert!(sampled);
        for rec in verify_pairs(&r, &sc, &pairs, DEFAULT_TRIALS, 99).unwrap() {
            assert!(rec.bound_ok, "{name} ({},{})", rec.s, rec.t);
            assert_eq!(rec.chi, rec.d, "{name} ({},{})", rec.s, rec.t);
        }
    }
}

fn type_and_pair() -> impl Strategy<Value = (String, u32, u32)> {
    prop::sample::select(vec!["A2", "B3", "C3", "G2", "A4", "D4", "B4", "F4", "A5"]).prop_flat_map(|name| {
        let rank = rs(name).rank();
        (Just(name.to_string()), 0u32..1 << rank, 0u32..1 << rank)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn index_bound_and_parity((name, s, t) in type_and_pair()) {
        let r = rs(&name);
        let sc = StructureConstants::new(&r).unwrap();
        let (s, t) = (Subset::from_bits(s), Subset::from_bits(t));
        let q = Seaweed::new(&r, s, t).unwrap();
        let w = witness_quantities(&q);
        let chi = generic_index(&q, &sc, DEFAULT_TRIALS, pair_seed(2, s, t)).unwrap();
        let d = d_bound(&r, s, t).unwrap();
        prop_assert!(chi <= d);
        prop_assert_eq!((q.dim() - chi) % 2, 0);
        prop_assert_eq!(q.dim() - d, 2 * (w.r + w.s));
        // The Chevalley involution swaps g_{S,T} and g_{T,S}.
        let swapped = Seaweed::new(&r, t, s).unwrap();
        prop_assert_eq!(swapped.dim(), q.dim());
        prop_assert_eq!(generic_index(&swapped, &sc, DEFAULT_TRIALS, pair_seed(3, t, s)).unwrap(), chi);
        prop_assert_eq!(d_bound(&r, t, s).unwrap(), d);
    }
}
