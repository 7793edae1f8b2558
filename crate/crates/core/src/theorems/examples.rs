//! Scripted counterexamples showing the hypotheses of the first theorem
//! cannot be dropped or weakened.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::factor::factorizes;
use crate::hall::{hall_analysis, hall_indices, satisfies_d_class};
use crate::sigma::{ClassId, SigmaPartition};

use super::{CheckKind, Conclusion, GroupAnalysis, ScriptStep, Verdict};

/// `σ_1 = {2,3}`, `σ_2 = {5}` and the residual class.
pub const A5_PARTITION: &str = "2,3|5|rest";
/// `σ_1 = {2}`, `σ_2 = {3,7}` and the residual class.
pub const PSL27_PARTITION: &str = "2|3,7|rest";

fn first_of_order(an: &GroupAnalysis, order: u64) -> Option<usize> {
    (0..an.lattice.len()).find(|&i| an.lattice.order(i) == order)
}

/// Records whether `AN` or `BN` is σ-nilpotent for `N = G`, setting the
/// verdict's hypothesis (σ-solubility) and conclusion.
fn finish(v: Verdict, soluble: bool, an_or_bn: bool) -> Verdict {
    Verdict {
        hypotheses_met: soluble,
        conclusion: Conclusion::from_bool(an_or_bn),
        ..v
    }
}

/// `A_5 = A_4 P` with `A_4` and the Sylow 5-subgroup `P` σ-nilpotent, yet
/// `A_5` is not σ-soluble and for `N = A_5` neither `AN` nor `BN` is
/// σ-nilpotent. Expected values are those for [`A5_PARTITION`]; other
/// partitions show which assertions flip.
pub fn check_example_a5(an: &GroupAnalysis, sigma: &SigmaPartition) -> Result<Verdict> {
    let view = an.view(sigma)?;
    let lat = &an.lattice;
    let top = lat.top_index();
    let mut v = Verdict::new(
        "example_a5",
        CheckKind::Counterexample,
        &an.name,
        Some(sigma),
    );
    let mut steps = vec![ScriptStep::new("order", 60, lat.order(top))];
    let a4 = first_of_order(an, 12);
    let p = first_of_order(an, 5);
    let (Some(a4), Some(p)) = (a4, p) else {
        steps.push(ScriptStep::new(
            "subgroups of orders 12 and 5 exist",
            true,
            false,
        ));
        v.steps = steps;
        return Ok(v.note("group lacks the subgroups of the script"));
    };
    let simple = lat.normal_indices() == vec![lat.trivial_index(), top];
    let an_nil = view.nilpotent[lat.join(a4, top)];
    let bn_nil = view.nilpotent[lat.join(p, top)];
    steps.extend([
        ScriptStep::new("A4 is sigma-nilpotent", true, view.nilpotent[a4]),
        ScriptStep::new(
            "Sylow 5-subgroup is sigma-nilpotent",
            true,
            view.nilpotent[p],
        ),
        ScriptStep::new("G = A4 P", true, factorizes(lat, a4, p)),
        ScriptStep::new("G is sigma-soluble", false, view.group_soluble()),
        ScriptStep::new("N = G is minimal normal", true, simple),
        ScriptStep::new(
            "AN or BN is sigma-nilpotent for N = G",
            false,
            an_nil || bn_nil,
        ),
    ]);
    v.steps = steps;
    v = v
        .witness("A", an.describe(a4))
        .witness("B", an.describe(p))
        .witness("N", an.describe(top));
    Ok(finish(v, view.group_soluble(), an_nil || bn_nil))
}

/// `PSL(2,7) = HP` with `H` a Hall `{3,7}`-subgroup and `P` a Sylow
/// 2-subgroup: `G` satisfies `D_{σ_1}` and `D_{σ_2}`, is simple and not
/// σ-soluble, and the conclusion of the first theorem fails for `N = G`.
/// Expected values are those for [`PSL27_PARTITION`].
pub fn check_example_psl27(an: &GroupAnalysis, sigma: &SigmaPartition) -> Result<Verdict> {
    let view = an.view(sigma)?;
    let lat = &an.lattice;
    let top = lat.top_index();
    let mut v = Verdict::new(
        "example_psl27",
        CheckKind::Counterexample,
        &an.name,
        Some(sigma),
    );
    let mut steps = vec![ScriptStep::new("order", 168, lat.order(top))];
    let simple = lat.normal_indices() == vec![lat.trivial_index(), top];
    steps.push(ScriptStep::new("G is simple", true, simple));
    steps.push(ScriptStep::new(
        "G satisfies D_{3,7}",
        true,
        hall_analysis(lat, &BTreeSet::from([3, 7])).dominated,
    ));
    let h = hall_indices(lat, &BTreeSet::from([3, 7])).first().copied();
    let p = hall_indices(lat, &BTreeSet::from([2])).first().copied();
    let (Some(h), Some(p)) = (h, p) else {
        steps.push(ScriptStep::new(
            "Hall {3,7}- and Sylow 2-subgroups exist",
            true,
            false,
        ));
        v.steps = steps;
        return Ok(v.note("group lacks the subgroups of the script"));
    };
    let an_nil = view.nilpotent[lat.join(h, top)];
    let bn_nil = view.nilpotent[lat.join(p, top)];
    let d_class = |k: usize| -> Result<bool> {
        if k < sigma.class_count() {
            satisfies_d_class(lat, sigma, ClassId(k))
        } else {
            Ok(false)
        }
    };
    steps.extend([
        ScriptStep::new("|H| for H a Hall {3,7}-subgroup", 21, lat.order(h)),
        ScriptStep::new("|P| for P a Sylow 2-subgroup", 8, lat.order(p)),
        ScriptStep::new("G = HP", true, factorizes(lat, h, p)),
        ScriptStep::new("H is sigma-nilpotent", true, view.nilpotent[h]),
        ScriptStep::new("P is sigma-nilpotent", true, view.nilpotent[p]),
        ScriptStep::new("G satisfies D_sigma_1", true, d_class(0)?),
        ScriptStep::new("G satisfies D_sigma_2", true, d_class(1)?),
        ScriptStep::new("G is sigma-soluble", false, view.group_soluble()),
        ScriptStep::new(
            "AN or BN is sigma-nilpotent for N = G",
            false,
            an_nil || bn_nil,
        ),
    ]);
    v.steps = steps;
    v = v
        .witness("A", an.describe(h))
        .witness("B", an.describe(p))
        .witness("N", an.describe(top));
    Ok(finish(v, view.group_soluble(), an_nil || bn_nil))
}
