//! Partitions of the primes and the sigma-predicates built on them.
//!
//! A [`SigmaPartition`] lists finitely many explicit prime classes and may
//! carry one residual class holding every other prime. Class identifiers are
//! positional: explicit classes are `0..k` and the residual class, when
//! present, is `k`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{generate, Group};
use crate::lattice::{
    centralizer_of_chief_factor, chief_series, normal_subgroups, ChiefFactor, SubgroupLattice,
};

/// Identifier of one class of a [`SigmaPartition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassId(pub usize);

/// A partition of all primes into disjoint classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPartition {
    classes: Vec<BTreeSet<u64>>,
    residual: bool,
}

/// The set of classes meeting `π(n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaSignature(pub BTreeSet<ClassId>);

impl SigmaSignature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: ClassId) -> bool {
        self.0.contains(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = ClassId> + '_ {
        self.0.iter().copied()
    }
}

impl SigmaPartition {
    pub fn new(classes: Vec<BTreeSet<u64>>, residual: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for &p in class {
                if !is_prime(p) {
                    return Err(Error::InvalidPartition(format!("{p} is not a prime")));
                }
                if !seen.insert(p) {
                    return Err(Error::InvalidPartition(format!(
                        "prime {p} appears in two classes"
                    )));
                }
            }
        }
        if classes.is_empty() && !residual {
            return Err(Error::InvalidPartition("no classes".into()));
        }
        Ok(SigmaPartition { classes, residual })
    }

    /// One class per listed prime, plus the residual class.
    pub fn prime_wise(primes: &[u64]) -> Result<Self> {
        Self::new(primes.iter().map(|&p| BTreeSet::from([p])).collect(), true)
    }

    /// The partition with a single class containing every prime.
    pub fn single_class() -> Self {
        SigmaPartition {
            classes: Vec::new(),
            residual: true,
        }
    }

    pub fn explicit_classes(&self) -> &[BTreeSet<u64>] {
        &self.classes
    }

    pub fn has_residual(&self) -> bool {
        self.residual
    }

    pub fn class_count(&self) -> usize {
        self.classes.len() + usize::from(self.residual)
    }

    pub fn class_ids(&self) -> impl Iterator<Item = ClassId> {
        (0..self.class_count()).map(ClassId)
    }

    pub fn check_class(&self, id: ClassId) -> Result<()> {
        if id.0 < self.class_count() {
            Ok(())
        } else {
            Err(Error::UnknownClass(id.0))
        }
    }

    pub fn residual_id(&self) -> Option<ClassId> {
        self.residual.then_some(ClassId(self.classes.len()))
    }

    /// Class containing prime `p`, if any.
    pub fn class_of_prime(&self, p: u64) -> Option<ClassId> {
        self.classes
            .iter()
            .position(|c| c.contains(&p))
            .map(ClassId)
            .or_else(|| self.residual_id())
    }

    /// `σ_i ∩ π(n)`.
    pub fn class_primes_in(&self, id: ClassId, n: u64) -> Result<BTreeSet<u64>> {
        self.check_class(id)?;
        Ok(prime_set(n)
            .into_iter()
            .filter(|&p| self.class_of_prime(p) == Some(id))
            .collect())
    }

    /// Whether every class of `self` lies inside a class of `coarser`, for
    /// the primes in `primes`.
    pub fn refines_on(&self, coarser: &SigmaPartition, primes: &BTreeSet<u64>) -> bool {
        primes.iter().all(|&p| {
            primes.iter().all(|&q| {
                let same_fine = self.class_of_prime(p).is_some()
                    && self.class_of_prime(p) == self.class_of_prime(q);
                !same_fine || coarser.class_of_prime(p) == coarser.class_of_prime(q)
            })
        })
    }

    /// Human-readable class label, e.g. `{2,3}` or `rest`.
    pub fn class_label(&self, id: ClassId) -> String {
        match self.classes.get(id.0) {
            Some(c) => {
                let ps: Vec<String> = c.iter().map(u64::to_string).collect();
                format!("{{{}}}", ps.join(","))
            }
            None => "rest".to_string(),
        }
    }
}

impl fmt::Display for SigmaPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| c.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        if self.residual {
            parts.push("rest".into());
        }
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for SigmaPartition {
    type Err = Error;

    /// Classes separated by `|`, primes by `,`; `rest` is the residual class.
    fn from_str(s: &str) -> Result<Self> {
        let mut classes = Vec::new();
        let mut residual = false;
        for part in s.split('|') {
            let part = part.trim();
            if part == "rest" {
                if residual {
                    return Err(Error::InvalidPartition("'rest' given twice".into()));
                }
                residual = true;
                continue;
            }
            let mut class = BTreeSet::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let p: u64 = tok.parse().map_err(|_| {
                    Error::InvalidPartition(format!("'{tok}' is neither a prime nor 'rest'"))
                })?;
                class.insert(p);
            }
            classes.push(class);
        }
        Self::new(classes, residual)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `π(n)` by trial division.
pub fn prime_set(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

/// Largest divisor of `n` whose primes all lie in `pi`.
pub fn pi_part(mut n: u64, pi: &BTreeSet<u64>) -> u64 {
    let mut part = 1;
    for &p in pi {
        while n.is_multiple_of(p) {
            part *= p;
            n /= p;
        }
    }
    part
}

pub fn is_pi_number(n: u64, pi: &BTreeSet<u64>) -> bool {
    prime_set(n).is_subset(pi)
}

/// `σ(n)`.
pub fn sigma_of(n: u64, sigma: &SigmaPartition) -> Result<SigmaSignature> {
    prime_set(n)
        .into_iter()
        .map(|p| sigma.class_of_prime(p).ok_or(Error::PartitionIncomplete(p)))
        .collect::<Result<BTreeSet<_>>>()
        .map(SigmaSignature)
}

fn is_sigma_primary_number(n: u64, sigma: &SigmaPartition) -> Result<bool> {
    Ok(sigma_of(n, sigma)?.len() <= 1)
}

pub fn is_sigma_primary(g: &Group, sigma: &SigmaPartition) -> Result<bool> {
    is_sigma_primary_number(g.order(), sigma)
}

/// Whether `g` is a `σ_i`-group for the given class.
pub fn is_class_group(g: &Group, sigma: &SigmaPartition, id: ClassId) -> Result<bool> {
    sigma.check_class(id)?;
    Ok(sigma_of(g.order(), sigma)?.iter().all(|c| c == id))
}

/// `H/K ⋊ G/C_G(H/K)` is σ-primary; decided from its order
/// `|H/K| · |G : C_G(H/K)|`.
pub fn is_sigma_central(g: &Group, f: &ChiefFactor, sigma: &SigmaPartition) -> Result<bool> {
    let c = centralizer_of_chief_factor(g, f)?;
    is_sigma_primary_number(f.factor_order() * (g.order() / c.order()), sigma)
}

/// Orders `|H/K|` and indices `|G : C_G(H/K)|` along the canonical chief
/// series. Every chief-factor predicate depends on these numbers alone, so one
/// profile serves any number of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefProfile {
    pub factors: Vec<(u64, u64)>,
}

impl ChiefProfile {
    pub fn of(g: &Group) -> Result<Self> {
        let factors = chief_series(g)?
            .iter()
            .map(|f| {
                let c = centralizer_of_chief_factor(g, f)?;
                Ok((f.factor_order(), g.order() / c.order()))
            })
            .collect::<Result<_>>()?;
        Ok(ChiefProfile { factors })
    }

    pub fn sigma_nilpotent(&self, sigma: &SigmaPartition) -> Result<bool> {
        for &(order, index) in &self.factors {
            if !is_sigma_primary_number(order * index, sigma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sigma_soluble(&self, sigma: &SigmaPartition) -> Result<bool> {
        for &(order, _) in &self.factors {
            if !is_sigma_primary_number(order, sigma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Every chief factor is σ-central.
pub fn is_sigma_nilpotent(g: &Group, sigma: &SigmaPartition) -> Result<bool> {
    for f in chief_series(g)? {
        if !is_sigma_central(g, &f, sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every chief factor is σ-primary.
pub fn is_sigma_soluble(g: &Group, sigma: &SigmaPartition) -> Result<bool> {
    for f in chief_series(g)? {
        if !is_sigma_primary_number(f.factor_order(), sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The complete Hall σ-set of normal members witnessing
/// `G = H_1 × ... × H_t`, if one exists.
pub fn normal_hall_decomposition(
    lattice: &SubgroupLattice,
    sigma: &SigmaPartition,
) -> Result<Option<Vec<(ClassId, usize)>>> {
    let n = lattice.parent().order();
    let mut members = Vec::new();
    for id in sigma_of(n, sigma)?.iter() {
        let pi = sigma.class_primes_in(id, n)?;
        let target = pi_part(n, &pi);
        // A normal Hall subgroup is unique, so the first hit is the only one.
        match (0..lattice.len()).find(|&i| lattice.order(i) == target && lattice.is_normal(i)) {
            Some(i) => members.push((id, i)),
            None => return Ok(None),
        }
    }
    for (k, &(_, a)) in members.iter().enumerate() {
        for &(_, b) in &members[k + 1..] {
            if lattice.intersection_order(a, b) != 1 {
                return Ok(None);
            }
            let (ha, hb) = (lattice.subgroup(a), lattice.subgroup(b));
            let commute = ha
                .generators()
                .iter()
                .all(|x| hb.generators().iter().all(|y| x.commutes_with(y)));
            if !commute {
                return Ok(None);
            }
        }
    }
    let product: u64 = members.iter().map(|&(_, i)| lattice.order(i)).product();
    Ok((product == n).then_some(members))
}

/// σ-nilpotency via the direct-product-of-Hall-subgroups criterion.
pub fn is_sigma_nilpotent_hall(lattice: &SubgroupLattice, sigma: &SigmaPartition) -> Result<bool> {
    Ok(normal_hall_decomposition(lattice, sigma)?.is_some())
}

/// Join of a family of normal subgroups.
fn join_all<'a>(g: &Group, parts: impl Iterator<Item = &'a Group>) -> Group {
    generate(
        g.degree(),
        parts.flat_map(|h| h.generators().iter().cloned()),
    )
}

/// `O_π(G)`: the largest normal π-subgroup.
pub fn o_pi(g: &Group, pi: &BTreeSet<u64>) -> Result<Group> {
    let normals = normal_subgroups(g)?;
    let h = join_all(g, normals.iter().filter(|n| is_pi_number(n.order(), pi)));
    debug_assert!(is_pi_number(h.order(), pi));
    Ok(h)
}

/// `F_σ(G)`: the product of all normal σ-nilpotent subgroups.
pub fn sigma_fitting(g: &Group, sigma: &SigmaPartition) -> Result<Group> {
    let normals = normal_subgroups(g)?;
    let mut parts = Vec::new();
    for n in &normals {
        if is_sigma_nilpotent(n, sigma)? {
            parts.push(n.clone());
        }
    }
    Ok(join_all(g, parts.iter()))
}

/// `R_σ(G)`: the product of all normal σ-soluble subgroups.
pub fn sigma_radical(g: &Group, sigma: &SigmaPartition) -> Result<Group> {
    let normals = normal_subgroups(g)?;
    let mut parts = Vec::new();
    for n in &normals {
        if is_sigma_soluble(n, sigma)? {
            parts.push(n.clone());
        }
    }
    Ok(join_all(g, parts.iter()))
}
