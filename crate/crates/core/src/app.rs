//! Command implementations shared by the binary and the examples. Each
//! command returns a report and, where it produces one, a file artifact.

use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::blocks::{
    enumerate_b63, enumerate_blocks_bruteforce, enumerate_steiner_blocks, split_b63, BlockFamily, FamilyTag,
};
use crate::code::{
    assmus_mattson_check, build_code, classify_mds, dual_weight_distribution, enumerate_low_weight,
    macwilliams_transform, nmds_pairing_check, DualMethod, ScanMethod, WeightDistribution,
};
use crate::combinatorics::binomial;
use crate::design::{complement_lambda, verify_design_with_budget, IncidenceStructure};
use crate::error::{precondition, Result};
use crate::field::{Field, FieldRecord};
use crate::report::{reference, Basis, Check, ReportDocument};
use crate::support::{support_design_map, CodeSide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlocksMode {
    Brute,
    Constructive,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyTarget {
    B63,
    B63B0,
    B63B1,
    Steiner,
    CodeW5,
    CodeW6,
    DualMin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightsWhich {
    DualTrace,
    DualFormula,
    PrimalMacwilliams,
    LowWeightScan,
}

pub struct CommandOutput {
    pub report: ReportDocument,
    /// Family file, distribution JSON or codeword CSV.
    pub artifact: Option<String>,
}

/// Builds the field for `m`, pinned to a recorded polynomial when given.
pub fn make_field(m: u32, record: Option<&FieldRecord>) -> Result<Field> {
    match record {
        Some(r) if r.m != m => Err(precondition(format!("field record has m={}, command asks for m={m}", r.m))),
        Some(r) => Field::from_record(r),
        None => Field::new(m),
    }
}

fn timed<T>(report: &mut ReportDocument, step: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    report.timings_ms.insert(step.to_string(), start.elapsed().as_millis() as u64);
    out
}

fn c(n: u64, k: u64) -> u128 {
    binomial(n, k)
}

/// Closed-form block counts, when one is known for this family.
pub fn expected_block_count(q: u64, m: u32, k: usize, ell: usize, tag: FamilyTag) -> Option<(u128, &'static str)> {
    let q128 = q as u128;
    let even = m.is_multiple_of(2);
    match (k, ell, tag, even) {
        (5, 2, FamilyTag::Full, true) => Some((c(q + 1, 3) / 10, "C(q+1,3)/10")),
        (6, 3, FamilyTag::Full, false) => Some(((q128 - 8) * c(q + 1, 4) / 30, "(q-8)/30*C(q+1,4)")),
        (6, 3, FamilyTag::Full, true) => Some(((q128 - 4).pow(2) * c(q + 1, 3) / 120, "(q-4)^2/120*C(q+1,3)")),
        (6, 3, FamilyTag::B0, true) => Some((2 * (q128 - 4) * c(q + 1, 3) / 20, "2(q-4)*C(q+1,3)/20")),
        (6, 3, FamilyTag::B1, true) => Some(((q128 - 4) * (q128 - 16) * c(q + 1, 3) / 120, "(q-4)(q-16)/6*C(q+1,3)/20")),
        _ => None,
    }
}

/// Closed-form 3-design parameters for m even.
pub fn expected_lambda_even(q: u64, k: usize, tag: FamilyTag) -> Option<(u64, &'static str)> {
    match (k, tag) {
        (5, FamilyTag::Full) => Some((1, "1")),
        (6, FamilyTag::Full) => Some(((q - 4) * (q - 4) / 6, "(q-4)^2/6")),
        (6, FamilyTag::B0) => Some((2 * (q - 4), "2(q-4)")),
        (6, FamilyTag::B1) => Some(((q - 4) * (q - 16) / 6, "(q-4)(q-16)/6")),
        _ => None,
    }
}

pub fn cmd_field_info(field: &Field) -> CommandOutput {
    let mut report = ReportDocument::new(field.record(), "field-info");
    report.put("q", field.q());
    report.put("field_size", field.size());
    report.put("unit_circle_order", field.n());
    report.put("alpha", format!("{:#x}", field.alpha().0));
    report.put("gamma", format!("{:#x}", field.gamma().0));
    report.put("record", field.record().to_string());
    let gamma_order = (1..=field.n() as u64).find(|&j| field.pow(field.gamma(), j) == crate::FieldElement::ONE);
    report.check(Check::new("order of gamma", Basis::Definition, field.n(), gamma_order.unwrap_or(0)));
    CommandOutput { report, artifact: Some(format!("{}\n", field.record())) }
}

fn constructive_family(field: &Field, k: usize, ell: usize, budget: u128) -> Result<BlockFamily> {
    match (k, ell) {
        (5, 2) => enumerate_steiner_blocks(field),
        (6, 3) => enumerate_b63(field, budget),
        _ => Err(precondition(format!("no constructive enumerator for (k, ell) = ({k}, {ell})"))),
    }
}

pub fn cmd_blocks(field: &Field, k: usize, ell: usize, mode: BlocksMode, budget: u128) -> Result<CommandOutput> {
    let mut report = ReportDocument::new(field.record(), format!("blocks k={k} ell={ell}"));
    let family = match mode {
        BlocksMode::Brute => timed(&mut report, "brute", || enumerate_blocks_bruteforce(field, k, ell, budget))?,
        BlocksMode::Constructive => timed(&mut report, "constructive", || constructive_family(field, k, ell, budget))?,
        BlocksMode::Both => {
            let brute = timed(&mut report, "brute", || enumerate_blocks_bruteforce(field, k, ell, budget))?;
            let built = timed(&mut report, "constructive", || constructive_family(field, k, ell, budget))?;
            report.check(Check::new("constructive family equals brute force", Basis::Independent, true, built == brute));
            brute
        }
    };
    report.put("count", family.len());
    if let Some((count, formula)) = expected_block_count(field.q(), field.m(), k, ell, FamilyTag::Full) {
        report.check(Check::new("block count", Basis::Formula, count, family.len()).with_formula(formula));
    }
    Ok(CommandOutput { artifact: Some(family.to_file_string()), report })
}

fn design_checks(
    report: &mut ReportDocument,
    field: &Field,
    s: &IncidenceStructure,
    t: usize,
    tag: FamilyTag,
    budget: u128,
) -> Result<Option<u64>> {
    let r = timed(report, "verify", || verify_design_with_budget(s, t, budget))?;
    report.put("design", &r);
    let q = field.q();
    let natural_t = if field.m().is_multiple_of(2) { 3 } else { 4 };
    if t == natural_t && tag != FamilyTag::Support {
        if let Some(l) = reference::design_lambda(q, t, s.k()) {
            report.check(Check::new(format!("{t}-design lambda"), Basis::Reference, l, fmt_lambda(&r.lambda)));
        }
        if field.m().is_multiple_of(2) {
            if let Some((l, f)) = expected_lambda_even(q, s.k(), tag) {
                report.check(Check::new("lambda from the closed form", Basis::Formula, l, fmt_lambda(&r.lambda)).with_formula(f));
            }
        } else {
            report.check(Check::new("is a 4-design", Basis::Formula, true, r.is_design));
            let (half, quarter) = ((q - 8) / 2, (q - 8) / 4);
            let matches: Vec<&str> = [("(q-8)/2", half), ("(q-8)/4", quarter)]
                .iter()
                .filter(|(_, v)| r.lambda == Some(*v))
                .map(|(name, _)| *name)
                .collect();
            report.put(
                "lambda_candidates",
                serde_json::json!({ "(q-8)/2": half, "(q-8)/4": quarter, "matches": matches }),
            );
        }
    }
    Ok(r.lambda)
}

fn fmt_lambda(l: &Option<u64>) -> String {
    l.map_or_else(|| "not a design".to_string(), |v| v.to_string())
}

fn family_for(field: &Field, target: VerifyTarget, budget: u128) -> Result<BlockFamily> {
    let even = field.m().is_multiple_of(2);
    match target {
        VerifyTarget::B63 | VerifyTarget::DualMin => enumerate_b63(field, budget),
        VerifyTarget::B63B0 | VerifyTarget::B63B1 => {
            if !even {
                return Err(precondition("the B0/B1 split is defined for m even"));
            }
            let (b0, b1) = split_b63(field, &enumerate_b63(field, budget)?)?;
            Ok(if target == VerifyTarget::B63B0 { b0 } else { b1 })
        }
        VerifyTarget::Steiner => enumerate_steiner_blocks(field),
        VerifyTarget::CodeW5 if even => enumerate_steiner_blocks(field),
        VerifyTarget::CodeW5 => enumerate_blocks_bruteforce(field, 5, 2, budget),
        VerifyTarget::CodeW6 if even => Ok(split_b63(field, &enumerate_b63(field, budget)?)?.1),
        VerifyTarget::CodeW6 => enumerate_b63(field, budget),
    }
}

pub fn cmd_verify(field: &Field, target: VerifyTarget, t: Option<usize>, budget: u128) -> Result<CommandOutput> {
    let t = t.unwrap_or(if field.m().is_multiple_of(2) { 3 } else { 4 });
    let name = serde_json::to_value(target).expect("target serializes");
    let mut report = ReportDocument::new(field.record(), format!("verify {} t={t}", name.as_str().unwrap_or("")));
    let family = timed(&mut report, "enumerate", || family_for(field, target, budget))?;
    report.put("family_size", family.len());
    if let Some((count, formula)) = expected_block_count(field.q(), field.m(), family.k, family.ell, family.tag) {
        report.check(Check::new("block count", Basis::Formula, count, family.len()).with_formula(formula));
    }
    let q = field.q();
    let v = field.n();
    let structure = match target {
        VerifyTarget::CodeW5 | VerifyTarget::CodeW6 | VerifyTarget::DualMin => {
            let (side, w) = match target {
                VerifyTarget::CodeW5 => (CodeSide::Code, 5),
                VerifyTarget::CodeW6 => (CodeSide::Code, 6),
                _ => (CodeSide::Dual, q as usize - 5),
            };
            let map = timed(&mut report, "supports", || support_design_map(field, side, w, &family, budget))?;
            report.put("supports", map.structure.b());
            report.check(Check::new("supports equal the block family", Basis::Reference, true, map.equal));
            if map.structure.b() > 0 {
                report.check(Check::new(
                    "codewords per support",
                    Basis::Reference,
                    q - 1,
                    map.codewords_per_support.map_or("varies".into(), |c| c.to_string()),
                ));
            }
            map.structure
        }
        _ => IncidenceStructure::from_family(&family)?,
    };
    if structure.b() == 0 {
        report.put("design", "empty family");
        return Ok(CommandOutput { artifact: Some(family.to_file_string()), report });
    }
    let tag = match target {
        VerifyTarget::DualMin => FamilyTag::Support,
        _ => family.tag,
    };
    let lambda = design_checks(&mut report, field, &structure, t, tag, budget)?;
    if target == VerifyTarget::DualMin {
        let base = IncidenceStructure::from_family(&family)?;
        let base_report = verify_design_with_budget(&base, t, budget)?;
        if let Some(bl) = base_report.lambda {
            let lc = complement_lambda(t, v, 6, bl)?;
            report.check(Check::new("complement lambda", Basis::Formula, lc, fmt_lambda(&lambda)).with_formula(
                "sum_i (-1)^i C(t,i) lambda_i of the block design",
            ));
        }
        if let Some(l) = reference::design_lambda(q, t, structure.k()) {
            report.check(Check::new(format!("{t}-design lambda"), Basis::Reference, l, fmt_lambda(&lambda)));
        }
        if field.m() % 2 == 1 && t == 4 {
            let formula = BigRational::new(
                ((q - 8) as u128 * c(q - 5, 4)).into(),
                30u32.into(),
            );
            report.check(
                Check::new("dual 4-design lambda", Basis::Formula, formula, fmt_lambda(&lambda))
                    .with_formula("(q-8)/30*C(q-5,4)"),
            );
        }
    }
    Ok(CommandOutput { artifact: Some(family.to_file_string()), report })
}

fn distribution_checks(report: &mut ReportDocument, claim: &str, dist: &WeightDistribution, table: Option<&[(usize, u64)]>) {
    if let Some(table) = table {
        let expected = WeightDistribution::from_u64(&reference::dense(table, dist.n()));
        report.check(Check::new(claim, Basis::Reference, expected.to_json(), dist.to_json()));
    }
}

/// Dual distribution by trace enumeration, falling back to the moment
/// method when the enumeration exceeds the budget.
pub fn dual_distribution(field: &Field, budget: u128) -> Result<(WeightDistribution, DualMethod)> {
    match dual_weight_distribution(field, DualMethod::TraceEnum, budget) {
        Ok(d) => Ok((d, DualMethod::TraceEnum)),
        Err(crate::Error::BudgetExceeded { .. }) => {
            Ok((dual_weight_distribution(field, DualMethod::SupportFormula, budget)?, DualMethod::SupportFormula))
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_weights(field: &Field, which: WeightsWhich, budget: u128) -> Result<CommandOutput> {
    let name = serde_json::to_value(which).expect("selector serializes");
    let mut report = ReportDocument::new(field.record(), format!("weights {}", name.as_str().unwrap_or("")));
    let q = field.q();
    let n = field.n();
    let size = |k: usize| BigUint::from(q).pow(k as u32);
    let artifact = match which {
        WeightsWhich::DualTrace | WeightsWhich::DualFormula => {
            let method = if which == WeightsWhich::DualTrace { DualMethod::TraceEnum } else { DualMethod::SupportFormula };
            let dist = timed(&mut report, "dual", || dual_weight_distribution(field, method, budget))?;
            report.check(Check::new("sum of counts", Basis::Definition, size(6), dist.total()));
            report.check(Check::new(
                "minimum distance",
                Basis::Reference,
                q - 5,
                dist.min_distance().unwrap_or(0),
            ));
            distribution_checks(&mut report, "dual distribution", &dist, reference::dual_distribution(q));
            dist.to_json()
        }
        WeightsWhich::PrimalMacwilliams => {
            let (dual, method) = timed(&mut report, "dual", || dual_distribution(field, budget))?;
            report.put("dual_method", method);
            let code = build_code(field)?;
            let primal = timed(&mut report, "macwilliams", || macwilliams_transform(&dual, n, 6, q))?;
            report.check(Check::new("sum of counts", Basis::Definition, size(code.dimension), primal.total()));
            let back = macwilliams_transform(&primal, n, code.dimension, q)?;
            report.check(Check::new("double transform is the identity", Basis::Definition, true, back == dual));
            distribution_checks(&mut report, "dual distribution", &dual, reference::dual_distribution(q));
            distribution_checks(&mut report, "primal distribution", &primal, reference::primal_distribution(q));
            let d = primal.min_distance().unwrap_or(0);
            let scan = timed(&mut report, "low-weight", || enumerate_low_weight(field, d.min(6), ScanMethod::Esp, budget))?;
            report.check(Check::new(format!("A_{d} from the low-weight scan"), Basis::Independent, primal.get(d), scan.count));
            primal.to_json()
        }
        WeightsWhich::LowWeightScan => {
            let mut counts = Vec::new();
            for w in 1..=6 {
                let method = if w >= 5 { ScanMethod::Esp } else { ScanMethod::Rank };
                let scan = timed(&mut report, &format!("w{w}"), || enumerate_low_weight(field, w, method, budget))?;
                counts.push(scan.count.to_string());
                if let Some(table) = reference::primal_distribution(q) {
                    let expected = reference::dense(table, n)[w];
                    report.check(Check::new(format!("A_{w}"), Basis::Reference, expected, scan.count));
                }
                if w == 6 && field.m() % 2 == 1 {
                    if let Some(table) = reference::dual_distribution(q) {
                        let expected = reference::dense(table, n)[n - 6];
                        report.check(Check::new("A_6 equals dual A_(n-6)", Basis::Reference, expected, scan.count));
                    }
                }
            }
            report.put("low_weight_counts", &counts);
            format!("[{}]", counts.join(", "))
        }
    };
    Ok(CommandOutput { report, artifact: Some(artifact) })
}

pub fn cmd_am_check(field: &Field, t: usize, budget: u128) -> Result<CommandOutput> {
    let mut report = ReportDocument::new(field.record(), format!("am-check t={t}"));
    let (q, n) = (field.q(), field.n());
    let (dual, method) = timed(&mut report, "dual", || dual_distribution(field, budget))?;
    report.put("dual_method", method);
    let code = build_code(field)?;
    let primal = macwilliams_transform(&dual, n, 6, q)?;
    let am = assmus_mattson_check(&primal, &dual, t, q)?;
    report.put("am", &am);
    let class = classify_mds(n, code.dimension, am.d, am.d_dual);
    report.put("class", class.to_string());
    let natural_t = if field.m().is_multiple_of(2) { 3 } else { 4 };
    if t == natural_t && (q == 16 || q == 32) {
        report.check(Check::new("hypothesis holds", Basis::Reference, false, am.hypothesis_holds));
    }
    Ok(CommandOutput { report, artifact: None })
}

pub fn cmd_classify(field: &Field, budget: u128) -> Result<CommandOutput> {
    let mut report = ReportDocument::new(field.record(), "classify");
    let (dual, method) = timed(&mut report, "dual", || dual_distribution(field, budget))?;
    report.put("dual_method", method);
    let code = build_code(field)?;
    let primal = macwilliams_transform(&dual, code.n, 6, field.q())?;
    let (d, dd) = (primal.min_distance().unwrap_or(0), dual.min_distance().unwrap_or(0));
    let class = classify_mds(code.n, code.dimension, d, dd);
    report.put("parameters", format!("[{}, {}, {d}]", code.n, code.dimension));
    report.put("dual_parameters", format!("[{}, 6, {dd}]", code.n));
    report.put("class", class.to_string());
    let (expected_d, expected_class) = if field.m().is_multiple_of(2) { (5, "neither") } else { (6, "NMDS") };
    report.check(Check::new("minimum distance", Basis::Reference, expected_d, d));
    report.check(Check::new("class", Basis::Reference, expected_class, class));
    Ok(CommandOutput { report, artifact: None })
}

pub fn cmd_nmds(field: &Field, sample: usize, seed: u64, budget: u128) -> Result<CommandOutput> {
    let mut report = ReportDocument::new(field.record(), format!("nmds sample={sample}"));
    let r = timed(&mut report, "pairing", || nmds_pairing_check(field, sample, seed, budget))?;
    report.put("nmds", &r);
    report.check(Check::new("minimum weight counts agree", Basis::Independent, r.dual_min_weight_count, r.min_weight_count));
    report.check(Check::new("sampled codewords with a unique disjoint dual support", Basis::Definition, r.sampled, r.unique_pairings));
    report.check(Check::new(
        "codewords per support",
        Basis::Reference,
        field.q() - 1,
        r.codewords_per_support.map_or("varies".into(), |c| c.to_string()),
    ));
    if let Some(table) = reference::dual_distribution(field.q()) {
        let expected = reference::dense(table, field.n())[r.d_dual];
        report.check(Check::new("minimum weight count", Basis::Reference, expected, r.min_weight_count));
    }
    Ok(CommandOutput { report, artifact: None })
}
