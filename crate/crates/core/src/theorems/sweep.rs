use rayon::prelude::*;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::DEFAULT_LATTICE_LIMIT;
use crate::sigma::SigmaPartition;

use super::examples::{check_example_a5, check_example_psl27, A5_PARTITION, PSL27_PARTITION};
use super::lemmas::{run_group_lemmas, run_sigma_lemmas};
use super::report::{GroupEntry, Report, Skip};
use super::statements::{verify_theorem1, verify_theorem2, verify_theorem3};
use super::{GroupAnalysis, Verdict};

/// Prime-wise on every prime up to 11, single-class, the two partitions of
/// the scripted examples, and `{2} | {2}'`.
pub const DEFAULT_PARTITIONS: &[&str] = &[
    "2|3|5|7|11|rest",
    "rest",
    A5_PARTITION,
    PSL27_PARTITION,
    "2|rest",
];

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub partitions: Vec<SigmaPartition>,
    /// Groups above this order are skipped.
    pub max_order: Option<u64>,
    pub lattice_limit: u64,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            partitions: DEFAULT_PARTITIONS
                .iter()
                .map(|s| s.parse().expect("default partition"))
                .collect(),
            max_order: None,
            lattice_limit: DEFAULT_LATTICE_LIMIT,
            threads: 0,
        }
    }
}

struct GroupOutcome {
    entry: Option<GroupEntry>,
    skipped: Vec<Skip>,
    verdicts: Vec<Verdict>,
}

fn skip(group: &str, partition: Option<&SigmaPartition>, reason: String) -> Skip {
    Skip {
        group: group.to_string(),
        partition: partition.map(|p| p.to_string()),
        reason,
    }
}

/// Runs every theorem, lemma and scripted example over the corpus. Verdicts
/// appear in corpus order, then partition order, whatever the thread count.
/// Fails only on malformed corpus entries.
pub fn run_sweep(corpus: &Corpus, config: &SweepConfig) -> Result<Report> {
    let groups: Vec<(String, Group)> = corpus
        .entries
        .iter()
        .map(|e| Ok((e.name.clone(), e.build()?)))
        .collect::<Result<_>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
    let outcomes: Vec<GroupOutcome> = pool.install(|| {
        groups
            .par_iter()
            .map(|(name, g)| check_group(name, g, config))
            .collect::<Result<_>>()
    })?;

    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    let mut verdicts = Vec::new();
    for o in outcomes {
        entries.extend(o.entry);
        skipped.extend(o.skipped);
        verdicts.extend(o.verdicts);
    }
    let partitions = config.partitions.iter().map(|p| p.to_string()).collect();
    Ok(Report::new(partitions, entries, skipped, verdicts))
}

fn check_group(name: &str, g: &Group, config: &SweepConfig) -> Result<GroupOutcome> {
    let mut out = GroupOutcome {
        entry: None,
        skipped: Vec::new(),
        verdicts: Vec::new(),
    };
    if let Some(max) = config.max_order {
        if g.order() > max {
            out.skipped
                .push(skip(name, None, format!("order {} > {max}", g.order())));
            return Ok(out);
        }
    }
    let an = match GroupAnalysis::with_limit(name, g, config.lattice_limit) {
        Ok(an) => an,
        Err(Error::LatticeThreshold { order, limit }) => {
            out.skipped.push(skip(
                name,
                None,
                format!("order {order} > lattice threshold {limit}"),
            ));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    out.entry = Some(GroupEntry {
        name: name.to_string(),
        degree: g.degree(),
        order: g.order(),
        subgroups: an.lattice.len(),
    });
    out.verdicts.extend(run_group_lemmas(&an)?);

    let per_partition: Vec<std::result::Result<Vec<Verdict>, Skip>> = config
        .partitions
        .par_iter()
        .map(|sigma| {
            let view = match an.view(sigma) {
                Ok(view) => view,
                Err(Error::PartitionIncomplete(p)) => {
                    return Ok(Err(skip(
                        name,
                        Some(sigma),
                        format!("prime {p} lies in no class"),
                    )))
                }
                Err(e) => return Err(e),
            };
            let mut vs = verify_theorem1(&view);
            vs.extend(verify_theorem2(&view));
            vs.extend(view.signature.iter().map(|id| verify_theorem3(&view, id)));
            vs.extend(run_sigma_lemmas(&view)?);
            Ok(Ok(vs))
        })
        .collect::<Result<_>>()?;
    for r in per_partition {
        match r {
            Ok(vs) => out.verdicts.extend(vs),
            Err(s) => out.skipped.push(s),
        }
    }

    match name {
        "A5" => out
            .verdicts
            .push(check_example_a5(&an, &A5_PARTITION.parse()?)?),
        "PSL27" => out
            .verdicts
            .push(check_example_psl27(&an, &PSL27_PARTITION.parse()?)?),
        _ => {}
    }
    Ok(out)
}
