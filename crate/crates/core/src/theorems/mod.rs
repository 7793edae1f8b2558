//! Executable checks of the factorization theorems, the two scripted
//! counterexamples, and the supporting lemma battery.
//!
//! Every check yields [`Verdict`]s. A theorem or lemma verdict is a violation
//! when its hypotheses hold and its conclusion fails; a scripted example is a
//! violation when any observed step differs from the expected one.

mod examples;
mod lemmas;
mod report;
mod statements;
mod sweep;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::group::Group;
use crate::lattice::{quotient, SubgroupLattice, DEFAULT_LATTICE_LIMIT};
use crate::sigma::{sigma_of, ChiefProfile, SigmaPartition, SigmaSignature};

pub use examples::{check_example_a5, check_example_psl27, A5_PARTITION, PSL27_PARTITION};
pub use lemmas::{run_group_lemmas, run_sigma_lemmas};
pub use report::{CheckSummary, GroupEntry, Report, Skip, Summary};
pub use statements::{verify_theorem1, verify_theorem2, verify_theorem3};
pub use sweep::{run_sweep, SweepConfig, DEFAULT_PARTITIONS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem,
    Lemma,
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Holds,
    Fails,
    NotApplicable,
}

impl Conclusion {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Conclusion::Holds
        } else {
            Conclusion::Fails
        }
    }
}

/// One scripted assertion of a counterexample check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScriptStep {
    pub name: String,
    pub expected: String,
    pub observed: String,
}

impl ScriptStep {
    pub fn new(name: &str, expected: impl ToString, observed: impl ToString) -> Self {
        ScriptStep {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    pub kind: CheckKind,
    pub hypotheses_met: bool,
    pub conclusion: Conclusion,
    pub witnesses: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<ScriptStep>,
}

impl Verdict {
    pub fn new(
        check: &str,
        kind: CheckKind,
        group: &str,
        partition: Option<&SigmaPartition>,
    ) -> Self {
        Verdict {
            check: check.to_string(),
            group: group.to_string(),
            partition: partition.map(|s| s.to_string()),
            kind,
            hypotheses_met: false,
            conclusion: Conclusion::NotApplicable,
            witnesses: BTreeMap::new(),
            notes: Vec::new(),
            steps: Vec::new(),
        }
    }

    /// Hypotheses hold; the conclusion is `holds`.
    pub fn decided(mut self, holds: bool) -> Self {
        self.hypotheses_met = true;
        self.conclusion = Conclusion::from_bool(holds);
        self
    }

    /// Hypotheses fail for the stated reason.
    pub fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.hypotheses_met = false;
        self.conclusion = Conclusion::NotApplicable;
        self.notes.push(reason.into());
        self
    }

    pub fn witness(mut self, key: &str, value: impl ToString) -> Self {
        self.witnesses.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_violation(&self) -> bool {
        match self.kind {
            CheckKind::Counterexample => self.steps.iter().any(|s| !s.passed()),
            _ => self.hypotheses_met && self.conclusion == Conclusion::Fails,
        }
    }
}

/// A normal subgroup together with its quotient and the quotient's lattice.
pub struct Quotient {
    pub normal: usize,
    pub group: Group,
    pub lattice: SubgroupLattice,
    pub profile: ChiefProfile,
}

/// A group with its subgroup lattice and the chief profile of every
/// subgroup, shared by all partitions.
pub struct GroupAnalysis {
    pub name: String,
    pub lattice: SubgroupLattice,
    profiles: Vec<ChiefProfile>,
    minimal_normals: Vec<usize>,
    quotients: OnceLock<Result<Vec<Quotient>>>,
    pub(crate) square: OnceLock<Result<Option<Arc<ChiefProfile>>>>,
}

impl GroupAnalysis {
    pub fn new(name: &str, group: &Group) -> Result<Self> {
        Self::with_limit(name, group, DEFAULT_LATTICE_LIMIT)
    }

    pub fn with_limit(name: &str, group: &Group, lattice_limit: u64) -> Result<Self> {
        let lattice = SubgroupLattice::enumerate_within(group, lattice_limit)?;
        Self::from_lattice(name, lattice)
    }

    pub fn from_lattice(name: &str, lattice: SubgroupLattice) -> Result<Self> {
        let profiles = lattice
            .subgroups()
            .par_iter()
            .map(ChiefProfile::of)
            .collect::<Result<Vec<_>>>()?;
        let normals = lattice.normal_indices();
        let minimal_normals = normals
            .iter()
            .copied()
            .filter(|&n| {
                lattice.order(n) > 1
                    && !normals
                        .iter()
                        .any(|&m| m != n && lattice.order(m) > 1 && lattice.contains(n, m))
            })
            .collect();
        Ok(GroupAnalysis {
            name: name.to_string(),
            lattice,
            profiles,
            minimal_normals,
            quotients: OnceLock::new(),
            square: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Group {
        self.lattice.parent()
    }

    pub fn profile(&self, i: usize) -> &ChiefProfile {
        &self.profiles[i]
    }

    /// Lattice indices of the minimal normal subgroups.
    pub fn minimal_normals(&self) -> &[usize] {
        &self.minimal_normals
    }

    pub fn describe(&self, i: usize) -> String {
        self.lattice.subgroup(i).describe()
    }

    /// `G/N` for every normal `N`, in lattice order.
    pub fn quotients(&self) -> Result<&[Quotient]> {
        self.quotients
            .get_or_init(|| {
                let limit = self.group().order();
                self.lattice
                    .normal_indices()
                    .into_par_iter()
                    .map(|n| {
                        let group = quotient(self.group(), self.lattice.subgroup(n))?;
                        let lattice = SubgroupLattice::enumerate_within(&group, limit)?;
                        let profile = ChiefProfile::of(&group)?;
                        Ok(Quotient {
                            normal: n,
                            group,
                            lattice,
                            profile,
                        })
                    })
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn view<'a>(&'a self, sigma: &'a SigmaPartition) -> Result<SigmaView<'a>> {
        SigmaView::new(self, sigma)
    }
}

/// σ-nilpotency and σ-solubility of every subgroup under one partition.
pub struct SigmaView<'a> {
    pub analysis: &'a GroupAnalysis,
    pub sigma: &'a SigmaPartition,
    pub signature: SigmaSignature,
    pub nilpotent: Vec<bool>,
    pub soluble: Vec<bool>,
}

impl<'a> SigmaView<'a> {
    /// Fails when a prime of `|G|` lies in no class of `sigma`.
    pub fn new(analysis: &'a GroupAnalysis, sigma: &'a SigmaPartition) -> Result<Self> {
        let signature = sigma_of(analysis.group().order(), sigma)?;
        let mut nilpotent = Vec::with_capacity(analysis.profiles.len());
        let mut soluble = Vec::with_capacity(analysis.profiles.len());
        for p in &analysis.profiles {
            nilpotent.push(p.sigma_nilpotent(sigma)?);
            soluble.push(p.sigma_soluble(sigma)?);
        }
        Ok(SigmaView {
            analysis,
            sigma,
            signature,
            nilpotent,
            soluble,
        })
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        &self.analysis.lattice
    }

    pub fn top(&self) -> usize {
        self.analysis.lattice.top_index()
    }

    pub fn group_nilpotent(&self) -> bool {
        self.nilpotent[self.top()]
    }

    pub fn group_soluble(&self) -> bool {
        self.soluble[self.top()]
    }

    /// Index of `F_σ(G)`.
    pub fn fitting(&self) -> usize {
        self.lattice().join_of_normals(|i| self.nilpotent[i])
    }

    /// Index of `R_σ(G)`.
    pub fn radical(&self) -> usize {
        self.lattice().join_of_normals(|i| self.soluble[i])
    }
}
