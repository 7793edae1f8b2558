mod oracles;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sigmafact_core::factor::{find_factorizations, is_factorization};
use sigmafact_core::hall::hall_analysis;
use sigmafact_core::lattice::{
    centralizer_of_chief_factor, chief_series, chief_series_with, normal_subgroups, quotient,
    TieBreak,
};
use sigmafact_core::sigma::{
    is_sigma_central, is_sigma_nilpotent, is_sigma_soluble, prime_set, sigma_fitting, sigma_radical,
};
use sigmafact_core::theorems::GroupAnalysis;
use sigmafact_core::{Corpus, Group, Perm, SigmaPartition, SubgroupLattice};

const MAX_ORDER: u64 = 60;

struct Case {
    name: String,
    group: Group,
    lattice: SubgroupLattice,
}

impl std::fmt::Debug for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name)
    }
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        Corpus::builtin()
            .entries
            .iter()
            .map(|e| (e.name.clone(), e.build().unwrap()))
            .filter(|(_, g)| g.order() <= MAX_ORDER)
            .map(|(name, group)| Case {
                lattice: SubgroupLattice::enumerate(&group).unwrap(),
                name,
                group,
            })
            .collect()
    })
}

fn case() -> impl Strategy<Value = &'static Case> {
    (0..cases().len()).prop_map(|i| &cases()[i])
}

/// Random partitions of {2,3,5,7,11}, always with a residual class.
fn partition() -> impl Strategy<Value = SigmaPartition> {
    proptest::collection::vec(0usize..4, 5).prop_map(|labels| {
        let primes = [2u64, 3, 5, 7, 11];
        let mut classes: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); 3];
        for (p, l) in primes.iter().zip(labels) {
            // Label 3 sends the prime to the residual class.
            if l < 3 {
                classes[l].insert(*p);
            }
        }
        classes.retain(|c| !c.is_empty());
        SigmaPartition::new(classes, true).unwrap()
    })
}

fn random_perm(degree: usize, seed: u64) -> Perm {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.shuffle(&mut rng);
    Perm::from_images(images).unwrap()
}

fn orders(series: &[sigmafact_core::lattice::ChiefFactor]) -> Vec<u64> {
    let mut v: Vec<u64> = series.iter().map(|f| f.factor_order()).collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_agrees_with_closure(c in case(), seed in any::<u64>()) {
        let elems = oracles::elements(&c.group);
        let p = random_perm(c.group.degree(), seed);
        prop_assert_eq!(c.group.contains(&p), elems.contains(p.images()));
        let member = c.group.elements().unwrap()[seed as usize % elems.len()].clone();
        prop_assert!(c.group.contains(&member));
    }

    #[test]
    fn perm_text_round_trip(degree in 1usize..10, seed in any::<u64>()) {
        let p = random_perm(degree, seed);
        let back = Perm::parse(&p.to_string(), Some(degree)).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn composition_is_associative(degree in 1usize..9, s in any::<(u64, u64, u64)>()) {
        let (a, b, c) = (random_perm(degree, s.0), random_perm(degree, s.1), random_perm(degree, s.2));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left.images().to_vec(), oracles::compose(&oracles::compose(a.images(), b.images()), c.images()));
    }

    #[test]
    fn lattice_invariants(c in case()) {
        let l = &c.lattice;
        let n = c.group.order();
        prop_assert_eq!(l.order(l.trivial_index()), 1);
        prop_assert_eq!(l.subgroup(l.top_index()), &c.group);
        let class_total: usize = l.classes().iter().map(Vec::len).sum();
        prop_assert_eq!(class_total, l.len());
        for (i, h) in l.subgroups().iter().enumerate() {
            prop_assert_eq!(n % h.order(), 0, "Lagrange");
            let closed = c.group.generators().iter().all(|x| &h.conjugate_by(x) == h);
            prop_assert_eq!(l.is_normal(i), closed);
        }
    }

    #[test]
    fn chief_series_invariants(c in case()) {
        prop_assume!(!c.group.is_trivial());
        let normals = normal_subgroups(&c.group).unwrap();
        let series = chief_series(&c.group).unwrap();
        let reversed = chief_series_with(&c.group, TieBreak::Largest).unwrap();
        prop_assert_eq!(orders(&series), orders(&reversed), "Jordan-Hoelder");
        for f in &series {
            prop_assert!(f.factor_order() > 1);
            prop_assert!(f.below.is_normal_in(&c.group) && f.above.is_normal_in(&c.group));
            let between = normals.iter().any(|m| {
                m.order() > f.below.order() && m.order() < f.above.order()
                    && f.below.is_subgroup_of(m) && m.is_subgroup_of(&f.above)
            });
            prop_assert!(!between);
            let cent = centralizer_of_chief_factor(&c.group, f).unwrap();
            prop_assert!(f.below.is_subgroup_of(&cent));
            prop_assert!(cent.is_normal_in(&c.group));
        }
    }

    #[test]
    fn sigma_centrality_ignores_tie_break(c in case(), sigma in partition()) {
        prop_assume!(!c.group.is_trivial());
        let verdicts = |t| -> Vec<(u64, bool)> {
            let mut v: Vec<(u64, bool)> = chief_series_with(&c.group, t)
                .unwrap()
                .iter()
                .map(|f| (f.factor_order(), is_sigma_central(&c.group, f, &sigma).unwrap()))
                .collect();
            v.sort_unstable();
            v
        };
        prop_assert_eq!(verdicts(TieBreak::Smallest), verdicts(TieBreak::Largest));
    }

    #[test]
    fn sigma_predicate_laws(c in case(), sigma in partition()) {
        let nil = is_sigma_nilpotent(&c.group, &sigma).unwrap();
        let sol = is_sigma_soluble(&c.group, &sigma).unwrap();
        prop_assert!(!nil || sol);
        let single = SigmaPartition::single_class();
        prop_assert!(is_sigma_nilpotent(&c.group, &single).unwrap());
        prop_assert!(is_sigma_soluble(&c.group, &single).unwrap());
        // The prime-wise partition refines every partition.
        let primes: Vec<u64> = prime_set(c.group.order()).into_iter().collect();
        let finest = SigmaPartition::prime_wise(&primes).unwrap();
        prop_assert!(finest.refines_on(&sigma, &prime_set(c.group.order())));
        if is_sigma_nilpotent(&c.group, &finest).unwrap() {
            prop_assert!(nil);
        }
        if is_sigma_soluble(&c.group, &finest).unwrap() {
            prop_assert!(sol);
        }
    }

    #[test]
    fn fitting_and_radical(c in case(), sigma in partition()) {
        let f = sigma_fitting(&c.group, &sigma).unwrap();
        let r = sigma_radical(&c.group, &sigma).unwrap();
        prop_assert!(is_sigma_nilpotent(&f, &sigma).unwrap());
        prop_assert!(is_sigma_soluble(&r, &sigma).unwrap());
        prop_assert!(f.is_subgroup_of(&r));
        for n in normal_subgroups(&c.group).unwrap() {
            if is_sigma_nilpotent(&n, &sigma).unwrap() {
                prop_assert!(n.is_subgroup_of(&f));
            }
            if is_sigma_soluble(&n, &sigma).unwrap() {
                prop_assert!(n.is_subgroup_of(&r));
            }
        }
    }

    #[test]
    fn hall_nesting(c in case(), mask in 1u32..32) {
        let all = [2u64, 3, 5, 7, 11];
        let pi: BTreeSet<u64> = all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p).collect();
        let r = hall_analysis(&c.lattice, &pi);
        prop_assert!(!r.dominated || r.conjugate);
        prop_assert!(!r.conjugate || r.exists);
        let n = c.group.order();
        for h in &r.hall_subgroups {
            let (order, index) = (h.order(), n / h.order());
            prop_assert!(prime_set(order).is_subset(&pi));
            prop_assert!(prime_set(index).is_disjoint(&pi));
        }
        if prime_set(n).is_subset(&pi) {
            prop_assert!(r.dominated);
        }
    }

    #[test]
    fn quotients_have_the_right_order(c in case()) {
        for n in normal_subgroups(&c.group).unwrap() {
            let q = quotient(&c.group, &n).unwrap();
            prop_assert_eq!(q.order() * n.order(), c.group.order());
        }
    }

    #[test]
    fn factorizations_are_conjugation_invariant(c in case(), seed in any::<u64>()) {
        let l = &c.lattice;
        let elems = c.group.elements().unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        for f in find_factorizations(l, |_, _| true) {
            let (a, b) = (l.subgroup(f.a), l.subgroup(f.b));
            prop_assert!(is_factorization(&c.group, b, a).unwrap(), "symmetry");
            for _ in 0..20 {
                let x = &elems[rng.random_range(0..elems.len())];
                prop_assert!(is_factorization(&c.group, &a.conjugate_by(x), b).unwrap());
            }
        }
    }
}

#[test]
fn group_analysis_flags_match_library_predicates() {
    let sigma: SigmaPartition = "2,3|5|rest".parse().unwrap();
    for c in cases() {
        let an = GroupAnalysis::new(&c.name, &c.group).unwrap();
        let view = an.view(&sigma).unwrap();
        for (i, h) in an.lattice.subgroups().iter().enumerate() {
            assert_eq!(
                view.nilpotent[i],
                is_sigma_nilpotent(h, &sigma).unwrap(),
                "{}",
                c.name
            );
            assert_eq!(
                view.soluble[i],
                is_sigma_soluble(h, &sigma).unwrap(),
                "{}",
                c.name
            );
        }
    }
}
