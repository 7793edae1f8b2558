//! Factorizations `G = AB` and `G = AB = BC = CA` by subgroups.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{intersect, Group};
use crate::hall::hall_analysis;
use crate::lattice::SubgroupLattice;
use crate::sigma::{is_pi_number, pi_part};

/// A two-fold (`c == None`) or triple factorization of a lattice's parent,
/// by lattice index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub a: usize,
    pub b: usize,
    pub c: Option<usize>,
    /// Every factor is a proper subgroup.
    pub proper: bool,
}

impl Factorization {
    pub fn is_triple(&self) -> bool {
        self.c.is_some()
    }
}

/// `AB = G` via `|A|·|B| = |G|·|A ∩ B|`.
pub fn is_factorization(g: &Group, a: &Group, b: &Group) -> Result<bool> {
    for (h, what) in [(a, "first factor"), (b, "second factor")] {
        if h.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: h.degree(),
            });
        }
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup(what));
        }
    }
    if !(a.order() * b.order()).is_multiple_of(g.order()) {
        return Ok(false);
    }
    Ok(a.order() * b.order() == g.order() * intersect(a, b)?.order())
}

/// Lattice form of the product formula.
pub fn factorizes(lattice: &SubgroupLattice, a: usize, b: usize) -> bool {
    let n = lattice.parent().order();
    let ab = lattice.order(a) * lattice.order(b);
    ab.is_multiple_of(n) && ab == n * lattice.intersection_order(a, b)
}

/// All `G = AB` with `A` a conjugacy-class representative, `B` any subgroup,
/// and `filter(a, b)` true. Ordered by `(a, b)`.
pub fn find_factorizations<F>(lattice: &SubgroupLattice, filter: F) -> Vec<Factorization>
where
    F: Fn(usize, usize) -> bool + Sync,
{
    let top = lattice.top_index();
    lattice
        .class_representatives()
        .par_iter()
        .flat_map_iter(|&a| {
            let filter = &filter;
            (0..lattice.len())
                .filter(move |&b| factorizes(lattice, a, b) && filter(a, b))
                .map(move |b| Factorization {
                    a,
                    b,
                    c: None,
                    proper: a != top && b != top,
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// All `G = AB = BC = CA` with `A` a class representative, `B`, `C` any
/// subgroups, and every factor passing `filter`. Ordered by `(a, b, c)`.
pub fn find_triple_factorizations<F>(lattice: &SubgroupLattice, filter: F) -> Vec<Factorization>
where
    F: Fn(usize) -> bool + Sync,
{
    let candidates: Vec<usize> = (0..lattice.len()).filter(|&i| filter(i)).collect();
    let partners: Vec<Vec<usize>> = candidates
        .par_iter()
        .map(|&x| {
            candidates
                .iter()
                .copied()
                .filter(|&y| factorizes(lattice, x, y))
                .collect()
        })
        .collect();
    let position = |x: usize| candidates.binary_search(&x).ok();
    let top = lattice.top_index();
    lattice
        .class_representatives()
        .par_iter()
        .filter_map(|&a| position(a).map(|pa| (a, pa)))
        .flat_map_iter(|(a, pa)| {
            let mut out = Vec::new();
            for &b in &partners[pa] {
                let pb = position(b).unwrap();
                for &c in &partners[pb] {
                    if partners[pa].binary_search(&c).is_ok() {
                        out.push(Factorization {
                            a,
                            b,
                            c: Some(c),
                            proper: a != top && b != top && c != top,
                        });
                    }
                }
            }
            out
        })
        .collect()
}

/// Normal Hall π-subgroup of `H_i`, if it has one.
pub fn normal_hall_of(lattice: &SubgroupLattice, i: usize, pi: &BTreeSet<u64>) -> Option<usize> {
    let target = pi_part(lattice.order(i), pi);
    lattice
        .subgroups_of(i)
        .into_iter()
        .find(|&j| lattice.order(j) == target && lattice.is_normal_in(j, i))
}

/// Index of `O_π(G)` within the lattice.
pub fn o_pi_index(lattice: &SubgroupLattice, pi: &BTreeSet<u64>) -> usize {
    lattice.join_of_normals(|i| is_pi_number(lattice.order(i), pi))
}

/// Clause-by-clause outcome of the Hall-product check for `G = AB`.
#[derive(Clone, Debug, Serialize)]
pub struct ProductHallReport {
    /// `None` when every premise holds; otherwise the first failed one.
    pub inapplicable: Option<String>,
    pub a_pi: Option<usize>,
    pub b_pi: Option<usize>,
    /// `A_π B_π = B_π A_π` as sets.
    pub permutable: bool,
    /// `A_π B_π` is a subgroup of order the π-part of `|G|`.
    pub hall: bool,
    /// `[A_π, B_π] ≤ O_π(G)`.
    pub commutator_in_o_pi: bool,
    /// When `O_π(G) = 1`: `[A_π^G, B_π^G] = 1`; `None` otherwise.
    pub closures_commute: Option<bool>,
}

impl ProductHallReport {
    fn inapplicable(reason: String) -> Self {
        ProductHallReport {
            inapplicable: Some(reason),
            a_pi: None,
            b_pi: None,
            permutable: true,
            hall: true,
            commutator_in_o_pi: true,
            closures_commute: None,
        }
    }

    pub fn applicable(&self) -> bool {
        self.inapplicable.is_none()
    }

    pub fn holds(&self) -> bool {
        self.permutable
            && self.hall
            && self.commutator_in_o_pi
            && self.closures_commute != Some(false)
    }
}

/// Checks that, for `G = AB` with `D_π` and normal Hall π-subgroups `A_π`,
/// `B_π`, the product `A_π B_π` is a permutable Hall π-subgroup and
/// `[A_π, B_π] ≤ O_π(G)`.
pub fn product_hall_check(
    lattice: &SubgroupLattice,
    a: usize,
    b: usize,
    pi: &BTreeSet<u64>,
) -> ProductHallReport {
    if !factorizes(lattice, a, b) {
        return ProductHallReport::inapplicable("G != AB".into());
    }
    if !hall_analysis(lattice, pi).dominated {
        return ProductHallReport::inapplicable("G does not satisfy D_pi".into());
    }
    let Some(a_pi) = normal_hall_of(lattice, a, pi) else {
        return ProductHallReport::inapplicable("A has no normal Hall pi-subgroup".into());
    };
    let Some(b_pi) = normal_hall_of(lattice, b, pi) else {
        return ProductHallReport::inapplicable("B has no normal Hall pi-subgroup".into());
    };
    let ab = lattice.product_set(a_pi, b_pi);
    let ba = lattice.product_set(b_pi, a_pi);
    let permutable = ab == ba;
    let size = ab.count_ones(..) as u64;
    let hall = permutable
        && size == pi_part(lattice.parent().order(), pi)
        && lattice.order(lattice.join(a_pi, b_pi)) == size;
    let o = o_pi_index(lattice, pi);
    let comm = lattice.commutator(a_pi, b_pi);
    let commutator_in_o_pi = lattice.contains(o, comm);
    let closures_commute = (lattice.order(o) == 1)
        .then(|| lattice.centralizes(lattice.normal_closure(a_pi), lattice.normal_closure(b_pi)));
    ProductHallReport {
        inapplicable: None,
        a_pi: Some(a_pi),
        b_pi: Some(b_pi),
        permutable,
        hall,
        commutator_in_o_pi,
        closures_commute,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> Group {
        Group::from_cycle_strings(n, gens).unwrap()
    }

    fn s4() -> Group {
        grp(4, &["(1 2)", "(1 2 3 4)"])
    }

    #[test]
    fn product_formula() {
        let a5 = grp(5, &["(1 2 3)", "(3 4 5)"]);
        let a4 = grp(5, &["(1 2 3)", "(2 3 4)"]);
        let p = grp(5, &["(1 2 3 4 5)"]);
        assert!(is_factorization(&a5, &a4, &p).unwrap());
        assert!(is_factorization(&a5, &a5, &Group::trivial(5)).unwrap());
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let c3 = grp(4, &["(1 2 3)"]);
        assert!(is_factorization(&s4(), &d8, &c3).unwrap());
        assert!(!is_factorization(&s4(), &d8, &grp(4, &["(1 2)"])).unwrap());
        assert!(is_factorization(&a5, &grp(5, &["(1 2)"]), &p).is_err());
    }

    #[test]
    fn prime_order_has_no_proper_factorization() {
        let c5 = grp(5, &["(1 2 3 4 5)"]);
        let l = SubgroupLattice::enumerate(&c5).unwrap();
        assert!(
            find_factorizations(&l, |a, b| a != l.top_index() && b != l.top_index()).is_empty()
        );
        assert_eq!(find_factorizations(&l, |_, _| true).len(), 3);
    }

    #[test]
    fn s4_nilpotent_factorizations() {
        let l = SubgroupLattice::enumerate(&s4()).unwrap();
        let d8 = l.index_of(&grp(4, &["(1 2 3 4)", "(1 3)"])).unwrap();
        let nilpotent = |i: usize| {
            let h = l.subgroup(i);
            crate::sigma::is_sigma_nilpotent(h, &"2|3|rest".parse().unwrap()).unwrap()
        };
        let found = find_factorizations(&l, |a, b| nilpotent(a) && nilpotent(b));
        assert!(found
            .iter()
            .any(|f| l.class_of(f.a) == l.class_of(d8) && l.order(f.b) == 3));
        assert!(found.iter().all(|f| f.proper));
        let triples = find_triple_factorizations(&l, |i| i != l.top_index() && nilpotent(i));
        assert!(triples.is_empty());
    }

    #[test]
    fn triple_factorizations_of_c6() {
        let c6 = grp(6, &["(1 2 3 4 5 6)"]);
        let l = SubgroupLattice::enumerate(&c6).unwrap();
        let t = find_triple_factorizations(&l, |_| true);
        // C2 (index 1), C3 (index 2), C6 (index 3).
        assert!(t.contains(&Factorization {
            a: 1,
            b: 2,
            c: Some(3),
            proper: false
        }));
        assert!(t.iter().all(|f| {
            let c = f.c.unwrap();
            factorizes(&l, f.a, f.b) && factorizes(&l, f.b, c) && factorizes(&l, c, f.a)
        }));
        assert!(t.contains(&Factorization {
            a: 3,
            b: 3,
            c: Some(3),
            proper: false
        }));
    }

    #[test]
    fn hall_products() {
        let l = SubgroupLattice::enumerate(&s4()).unwrap();
        let d8 = l.index_of(&grp(4, &["(1 2 3 4)", "(1 3)"])).unwrap();
        let c3 = l.index_of(&grp(4, &["(1 2 3)"])).unwrap();
        let r = product_hall_check(&l, d8, c3, &BTreeSet::from([2]));
        assert!(r.applicable());
        assert_eq!(r.a_pi, Some(d8));
        assert_eq!(r.b_pi, Some(0));
        assert!(r.holds());
        let r = product_hall_check(&l, d8, c3, &BTreeSet::from([5]));
        assert!(r.applicable() && r.holds());
        assert_eq!(r.closures_commute, Some(true));

        let a5 = grp(5, &["(1 2 3)", "(3 4 5)"]);
        let l = SubgroupLattice::enumerate(&a5).unwrap();
        let a4 = l.index_of(&grp(5, &["(1 2 3)", "(2 3 4)"])).unwrap();
        let p = l.index_of(&grp(5, &["(1 2 3 4 5)"])).unwrap();
        // A5 lacks D_{2,3}, so the check is inapplicable; the Hall part of
        // the conclusion still holds by orders alone.
        let r = product_hall_check(&l, a4, p, &BTreeSet::from([2, 3]));
        assert!(!r.applicable());
        assert_eq!(pi_part(60, &BTreeSet::from([2, 3])), l.order(a4));
    }
}
