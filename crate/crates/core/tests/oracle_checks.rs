mod oracles;

use std::collections::BTreeSet;

use sigmafact_core::factor::{find_factorizations, is_factorization};
use sigmafact_core::lattice::normal_subgroups;
use sigmafact_core::sigma::{is_sigma_nilpotent, is_sigma_soluble, prime_set};
use sigmafact_core::{Corpus, Group, SigmaPartition, SubgroupLattice};

fn corpus_groups(max_order: u64) -> Vec<(String, Group)> {
    Corpus::builtin()
        .entries
        .iter()
        .map(|e| (e.name.clone(), e.build().unwrap()))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

fn lattice_sets(l: &SubgroupLattice) -> BTreeSet<BTreeSet<Vec<u32>>> {
    l.subgroups()
        .iter()
        .map(|h| {
            h.elements()
                .unwrap()
                .iter()
                .map(|p| p.images().to_vec())
                .collect()
        })
        .collect()
}

#[test]
fn subgroup_counts_match_pairwise_closure() {
    let corpus = Corpus::builtin();
    for (name, count) in [("S4", 30), ("A4", 10)] {
        let g = corpus.get(name).unwrap().build().unwrap();
        assert_eq!(oracles::subgroups(&g).len(), count, "{name}");
        assert_eq!(
            SubgroupLattice::enumerate(&g).unwrap().len(),
            count,
            "{name}"
        );
    }
}

#[test]
fn lattices_match_oracle_subgroup_sets() {
    for (name, g) in corpus_groups(24) {
        let lattice = SubgroupLattice::enumerate(&g).unwrap();
        assert_eq!(lattice_sets(&lattice), oracles::subgroups(&g), "{name}");
    }
}

#[test]
fn element_sets_match_oracle_closure() {
    for (name, g) in corpus_groups(400) {
        let ours: BTreeSet<Vec<u32>> = g
            .elements()
            .unwrap()
            .iter()
            .map(|p| p.images().to_vec())
            .collect();
        assert_eq!(ours, oracles::elements(&g), "{name}");
    }
}

#[test]
fn normal_subgroups_match_flag_filter() {
    for (name, g) in corpus_groups(168) {
        let lattice = SubgroupLattice::enumerate(&g).unwrap();
        let flagged: Vec<Group> = lattice
            .normal_indices()
            .into_iter()
            .map(|i| lattice.subgroup(i).clone())
            .collect();
        assert_eq!(normal_subgroups(&g).unwrap(), flagged, "{name}");
    }
}

#[test]
fn prime_wise_predicates_match_classical_oracles() {
    for (name, g) in corpus_groups(168) {
        let primes: Vec<u64> = prime_set(g.order()).into_iter().collect();
        let sigma = SigmaPartition::prime_wise(&primes).unwrap();
        let lattice = SubgroupLattice::enumerate(&g).unwrap();
        for h in lattice.subgroups() {
            assert_eq!(
                is_sigma_nilpotent(h, &sigma).unwrap(),
                oracles::is_nilpotent(h),
                "{name}: {}",
                h.describe()
            );
            assert_eq!(
                is_sigma_soluble(h, &sigma).unwrap(),
                oracles::is_soluble(h),
                "{name}: {}",
                h.describe()
            );
        }
    }
}

#[test]
fn product_formula_matches_set_product() {
    for (name, g) in corpus_groups(60) {
        let lattice = SubgroupLattice::enumerate(&g).unwrap();
        let found: BTreeSet<(usize, usize)> = find_factorizations(&lattice, |_, _| true)
            .iter()
            .map(|f| (f.a, f.b))
            .collect();
        for a in lattice.class_representatives() {
            for b in 0..lattice.len() {
                let (ha, hb) = (lattice.subgroup(a), lattice.subgroup(b));
                let literal = oracles::set_product_size(ha, hb) as u64 == g.order();
                assert_eq!(is_factorization(&g, ha, hb).unwrap(), literal, "{name}");
                assert_eq!(found.contains(&(a, b)), literal, "{name}");
            }
        }
    }
}

#[test]
fn known_sigma_predicate_values() {
    let corpus = Corpus::builtin();
    let get = |n: &str| corpus.get(n).unwrap().build().unwrap();
    let coarse: SigmaPartition = "2,3|5|rest".parse().unwrap();
    assert!(!is_sigma_soluble(&get("A5"), &coarse).unwrap());
    assert!(is_sigma_nilpotent(&get("A4"), &coarse).unwrap());
    let whole: SigmaPartition = "2,3,5|rest".parse().unwrap();
    assert!(is_sigma_soluble(&get("A5"), &whole).unwrap());
    assert!(is_sigma_nilpotent(&get("A5"), &whole).unwrap());
}
