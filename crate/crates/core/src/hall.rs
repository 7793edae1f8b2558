//! Sylow and Hall subgroups, read off the subgroup lattice.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::group::Group;
use crate::lattice::SubgroupLattice;
use crate::sigma::{is_pi_number, pi_part, sigma_of, ClassId, SigmaPartition};

/// Outcome of the `E_π` / `C_π` / `D_π` battery for one prime set.
#[derive(Clone, Debug)]
pub struct HallReport {
    pub pi: BTreeSet<u64>,
    /// `E_π`: a Hall π-subgroup exists.
    pub exists: bool,
    /// `C_π`: `E_π` and all Hall π-subgroups are conjugate.
    pub conjugate: bool,
    /// `D_π`: `C_π` and every π-subgroup lies in a Hall π-subgroup.
    pub dominated: bool,
    /// Lattice indices of the Hall π-subgroups.
    pub hall_indices: Vec<usize>,
    pub hall_subgroups: Vec<Group>,
}

/// Lattice indices of all subgroups of order exactly the π-part of `|G|`.
pub fn hall_indices(lattice: &SubgroupLattice, pi: &BTreeSet<u64>) -> Vec<usize> {
    let target = pi_part(lattice.parent().order(), pi);
    (0..lattice.len())
        .filter(|&i| lattice.order(i) == target)
        .collect()
}

/// Canonically first Sylow `p`-subgroup; trivial when `p ∤ |G|`.
pub fn sylow(lattice: &SubgroupLattice, p: u64) -> Group {
    let idx = hall_indices(lattice, &BTreeSet::from([p]));
    lattice.subgroup(idx[0]).clone()
}

/// Lattice indices of the Sylow `p`-subgroups.
pub fn sylow_indices(lattice: &SubgroupLattice, p: u64) -> Vec<usize> {
    hall_indices(lattice, &BTreeSet::from([p]))
}

pub fn hall_analysis(lattice: &SubgroupLattice, pi: &BTreeSet<u64>) -> HallReport {
    let halls = hall_indices(lattice, pi);
    let exists = !halls.is_empty();
    let conjugate = exists
        && halls
            .iter()
            .all(|&h| lattice.class_of(h) == lattice.class_of(halls[0]));
    let dominated = conjugate
        && (0..lattice.len())
            .filter(|&i| is_pi_number(lattice.order(i), pi))
            .all(|i| halls.iter().any(|&h| lattice.contains(h, i)));
    HallReport {
        pi: pi.clone(),
        exists,
        conjugate,
        dominated,
        hall_subgroups: halls.iter().map(|&i| lattice.subgroup(i).clone()).collect(),
        hall_indices: halls,
    }
}

/// `D_{σ_i}`, evaluated for `σ_i ∩ π(G)`.
pub fn satisfies_d_class(
    lattice: &SubgroupLattice,
    sigma: &SigmaPartition,
    id: ClassId,
) -> Result<bool> {
    let pi = sigma.class_primes_in(id, lattice.parent().order())?;
    Ok(hall_analysis(lattice, &pi).dominated)
}

/// Either a complete Hall σ-set or the first class lacking a Hall subgroup.
#[derive(Clone, Debug)]
pub enum CompleteHallSet {
    Found(Vec<(ClassId, usize)>),
    Missing(ClassId),
}

impl CompleteHallSet {
    pub fn found(&self) -> Option<&[(ClassId, usize)]> {
        match self {
            CompleteHallSet::Found(v) => Some(v),
            CompleteHallSet::Missing(_) => None,
        }
    }
}

/// One Hall `σ_i`-subgroup (canonically first) for each class in `σ(G)`.
pub fn complete_hall_sigma_set(
    lattice: &SubgroupLattice,
    sigma: &SigmaPartition,
) -> Result<CompleteHallSet> {
    let n = lattice.parent().order();
    let mut out = Vec::new();
    for id in sigma_of(n, sigma)?.iter() {
        let pi = sigma.class_primes_in(id, n)?;
        match hall_indices(lattice, &pi).first() {
            Some(&i) => out.push((id, i)),
            None => return Ok(CompleteHallSet::Missing(id)),
        }
    }
    Ok(CompleteHallSet::Found(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(n: usize, gens: &[&str]) -> SubgroupLattice {
        SubgroupLattice::enumerate(&Group::from_cycle_strings(n, gens).unwrap()).unwrap()
    }

    fn set(ps: &[u64]) -> BTreeSet<u64> {
        ps.iter().copied().collect()
    }

    #[test]
    fn sylow_subgroups() {
        let a5 = lat(5, &["(1 2 3)", "(3 4 5)"]);
        assert_eq!(sylow(&a5, 5).order(), 5);
        assert!(sylow(&a5, 7).is_trivial());
        assert_eq!(sylow_indices(&a5, 5).len(), 6);
        let s4 = lat(4, &["(1 2)", "(1 2 3 4)"]);
        let p = sylow(&s4, 2);
        assert_eq!(p.order(), 8);
        assert!(!p.is_abelian());
    }

    #[test]
    fn hall_battery() {
        let a5 = lat(5, &["(1 2 3)", "(3 4 5)"]);
        let r = hall_analysis(&a5, &set(&[2, 5]));
        assert!(!r.exists && !r.conjugate && !r.dominated);
        let r = hall_analysis(&a5, &set(&[2, 3]));
        assert!(r.exists && r.conjugate);
        // A4 is a Hall {2,3}-subgroup, but S3 = <(1 2 3), (1 2)(4 5)> is a
        // {2,3}-subgroup in no A4.
        assert!(!r.dominated);
        let r = hall_analysis(&a5, &set(&[2, 3, 5, 7]));
        assert!(r.dominated);
        assert_eq!(r.hall_subgroups.len(), 1);
    }

    #[test]
    fn d_class() {
        let s4 = lat(4, &["(1 2)", "(1 2 3 4)"]);
        let sigma: SigmaPartition = "2|3|rest".parse().unwrap();
        for id in sigma.class_ids() {
            assert!(satisfies_d_class(&s4, &sigma, id).unwrap());
        }
        assert!(satisfies_d_class(&s4, &sigma, ClassId(7)).is_err());
    }

    #[test]
    fn complete_sets() {
        let a5 = lat(5, &["(1 2 3)", "(3 4 5)"]);
        let sigma: SigmaPartition = "2,3|5|rest".parse().unwrap();
        let found = complete_hall_sigma_set(&a5, &sigma).unwrap();
        let orders: Vec<u64> = found
            .found()
            .unwrap()
            .iter()
            .map(|&(_, i)| a5.order(i))
            .collect();
        assert_eq!(orders, vec![12, 5]);
        let sigma: SigmaPartition = "2,5|3|rest".parse().unwrap();
        assert!(matches!(
            complete_hall_sigma_set(&a5, &sigma).unwrap(),
            CompleteHallSet::Missing(ClassId(0))
        ));
    }
}
