//! The subcommands. Each builds a [`SuiteResult`]; none of them print.

use invsegal::algebra::Structure;
use invsegal::filtration::{
    attachment_compare, from_gamma_coordinates, stage, stage_chain_report, FreeNerve, Variant,
};
use invsegal::gamma::{
    bousfield_group_extract, extract_monoid, restriction_matches_nerve, roundtrip_check, t_construct,
};
use invsegal::index::{category_laws, enumerate_hom, verify_generated_closure, Category};
use invsegal::nerve::{inerve, inerve_free, inerve_groupoid, nerve, nerve_free};
use invsegal::presheaf::{iso_check, reduce, representable, Shape, TruncatedDiagram};
use invsegal::segal::{
    bousfield_gamma_check, gamma_segal_check, strict_bousfield_check_with, strict_segal_check_with,
    strict_xi_check_with, CheckOptions, ConditionKind, ConditionReport,
};
use invsegal::{FinGroupoid, FinMonoid};
use rayon::prelude::*;
use serde_json::json;

use crate::inputs::Input;
use crate::report::{describe_witness, timed, CheckResult, SuiteResult};
use crate::CliError;

/// Largest level any command materializes.
pub const MAX_LEVEL_SIZE: usize = 1 << 20;

fn core_error(e: invsegal::Error) -> CliError {
    CliError::Input(e.to_string())
}

fn cap(what: &str, value: usize, max: usize) -> Result<(), CliError> {
    if value > max {
        return Err(CliError::Capability(format!("{what} = {value} exceeds the cap {max}")));
    }
    Ok(())
}

/// `base^exp`, refusing levels larger than [`MAX_LEVEL_SIZE`].
fn cap_level(name: &str, base: usize, exp: usize) -> Result<(), CliError> {
    let size = (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base.max(1)));
    match size {
        Some(s) if s <= MAX_LEVEL_SIZE => Ok(()),
        _ => Err(CliError::Capability(format!(
            "{name}: level {exp} would have {base}^{exp} elements (cap {MAX_LEVEL_SIZE})"
        ))),
    }
}

fn arrows(s: &Structure) -> usize {
    match s {
        Structure::Monoid { monoid, .. } => monoid.order(),
        Structure::Group { group, .. } => group.order(),
        Structure::Groupoid { groupoid, .. } => groupoid.morphism_count(),
    }
}

pub struct Common {
    pub timings: bool,
}

pub fn laws(rank: usize, common: &Common) -> Result<SuiteResult, CliError> {
    cap("--nmax for laws", rank, 4)?;
    let gamma_rank = rank.min(3);
    let mut suite = SuiteResult::new("laws").bound("rank", rank).bound("gamma_rank", gamma_rank);
    let plan = [
        (Category::Delta, rank),
        (Category::InvDelta, rank),
        (Category::Gamma, gamma_rank),
        (Category::GammaOp, gamma_rank),
    ];
    let checks: Vec<CheckResult> = plan
        .par_iter()
        .map(|&(category, bound)| {
            timed(common.timings, || {
                let r = category_laws(category, bound);
                let mut summary = format!(
                    "{} morphisms, {} composable pairs, {} triples up to rank {bound}",
                    r.morphisms, r.pairs_checked, r.triples_checked
                );
                if r.dictionary_pairs > 0 {
                    summary += &format!(", {} pairs against the pointed dictionary", r.dictionary_pairs);
                }
                if r.functor_pairs > 0 {
                    summary += &format!(", {} pairs through Δ → Γ", r.functor_pairs);
                }
                CheckResult::new(format!("laws {category}"), r.passed(), summary)
                    .reproduce(|| format!("laws --nmax {rank}"))
                    .detail(&r)
            })
        })
        .collect();
    suite.extend(checks);
    suite.push(timed(common.timings, || match verify_generated_closure(rank, rank) {
        Ok(r) => CheckResult::new(
            "generated closure",
            r.passed(),
            format!(
                "closure of order-preserving maps and flips equals the monotone maps for m, n <= {rank}; \
                 (0,2,1) preserves betweenness: {}, absent: {}",
                r.witness_preserves_betweenness, r.witness_absent
            ),
        )
        .reproduce(|| format!("laws --nmax {rank}"))
        .detail(&r),
        Err(e) => CheckResult::new("generated closure", false, e.to_string()),
    }));
    Ok(suite)
}

pub fn hom(category: Category, m: usize, n: usize, list: bool) -> Result<SuiteResult, CliError> {
    cap("source rank", m, 8)?;
    cap("target rank", n, 8)?;
    let homs = enumerate_hom(category, m, n);
    let mut suite = SuiteResult::new("hom").bound("m", m).bound("n", n);
    let text: Vec<String> = homs.iter().map(ToString::to_string).collect();
    let mut check = CheckResult::new(
        format!("hom {category}"),
        true,
        format!("|Hom({m}, {n})| = {}", homs.len()),
    );
    check.detail = if list {
        json!({ "category": category.to_string(), "count": homs.len(), "morphisms": text })
    } else {
        json!({ "category": category.to_string(), "count": homs.len() })
    };
    suite.push(check);
    Ok(suite)
}

/// The simplicial diagram a structure stands for: its nerve, or for a
/// groupoid the ascending part of its invertible nerve.
fn simplicial_nerve(s: &Structure, truncation: usize) -> TruncatedDiagram {
    match s {
        Structure::Monoid { monoid, .. } => nerve(monoid, truncation),
        Structure::Group { group, .. } => nerve(group.monoid(), truncation),
        Structure::Groupoid { groupoid, .. } => inerve_groupoid(groupoid, truncation).restrict_to_ascending(),
    }
}

fn invertible_nerve(s: &Structure, truncation: usize) -> Option<TruncatedDiagram> {
    match s {
        Structure::Monoid { .. } => None,
        Structure::Group { group, .. } => Some(inerve(group, truncation)),
        Structure::Groupoid { groupoid, .. } => Some(inerve_groupoid(groupoid, truncation)),
    }
}

fn is_group(s: &Structure) -> bool {
    !matches!(s, Structure::Monoid { .. })
}

fn condition_check(
    kind: ConditionKind,
    report: &ConditionReport,
    input: &Input,
    reproduce: String,
    iff_group: bool,
) -> CheckResult {
    let verdicts: Vec<String> = report
        .verdict
        .iter()
        .map(|v| format!("{}:{}", v.level, if report_pass(v) { "pass" } else { "fail" }))
        .collect();
    let mut summary = format!("levels {}", verdicts.join(" "));
    if let Some(w) = &report.witness {
        summary += &format!("; {}", describe_witness(w));
    }
    let passed = if iff_group {
        let group = is_group(&input.structure);
        summary += &format!("; {} group", if group { "a" } else { "not a" });
        report.passed() == group
    } else {
        report.passed()
    };
    CheckResult::new(kind.to_string(), passed, summary)
        .input(&input.name)
        .reproduce(|| reproduce)
        .detail(report)
}

fn report_pass(v: &invsegal::segal::LevelVerdict) -> bool {
    matches!(v.result, invsegal::segal::Verdict::Pass)
}

pub struct ConditionArgs {
    pub kind: ConditionKind,
    pub n_max: usize,
    pub reduced: bool,
    pub iff_group: bool,
}

pub fn condition(inputs: &[Input], args: &ConditionArgs, common: &Common) -> Result<SuiteResult, CliError> {
    cap("--nmax", args.n_max, 8)?;
    for input in inputs {
        cap_level(&input.name, arrows(&input.structure), args.n_max.max(1))?;
    }
    let truncation = args.n_max.max(1);
    let mut suite = SuiteResult::new(&args.kind.to_string()).bound("nmax", args.n_max);
    suite.inputs = inputs.iter().map(|i| i.digest.clone()).collect();
    let opts = CheckOptions {
        n_max: args.n_max,
        require_reduced: args.reduced,
    };
    let subcommand = args.kind.to_string();
    let results: Vec<Result<Option<CheckResult>, CliError>> = inputs
        .par_iter()
        .map(|input| {
            let mut flags = format!("{subcommand} {} --nmax {}", input.selector, args.n_max);
            if args.reduced {
                flags += " --reduced";
            }
            if args.iff_group {
                flags += " --iff-group";
            }
            let diagram = match args.kind {
                ConditionKind::Xi => match invertible_nerve(&input.structure, truncation) {
                    Some(d) => d,
                    None => return Ok(None),
                },
                _ => simplicial_nerve(&input.structure, truncation),
            };
            let check = timed(common.timings, || {
                let report = match args.kind {
                    ConditionKind::Segal => strict_segal_check_with(&diagram, opts),
                    ConditionKind::Bousfield => strict_bousfield_check_with(&diagram, opts),
                    _ => strict_xi_check_with(&diagram, opts),
                };
                match report {
                    Ok(r) => condition_check(args.kind, &r, input, flags, args.iff_group),
                    Err(e) => CheckResult::new(args.kind.to_string(), false, e.to_string()).input(&input.name),
                }
            });
            Ok(Some(check))
        })
        .collect();
    for (input, r) in inputs.iter().zip(results) {
        match r? {
            Some(check) => suite.push(check),
            None => suite.skip(&input.name, "ξ needs a group or groupoid"),
        }
    }
    if suite.checks.is_empty() {
        return Err(CliError::Input("no input is a group or groupoid".into()));
    }
    Ok(suite)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct NerveArgs {
    pub truncation: usize,
    pub simplicial: bool,
    pub free: Option<usize>,
    pub word_bound: usize,
}

fn nerve_check(name: &str, d: &TruncatedDiagram) -> CheckResult {
    let audit = d.audit();
    let summary = format!(
        "{:?} nerve, level sizes {:?}, {} composites audited",
        d.shape(),
        d.level_sizes(),
        audit.pairs_checked
    );
    CheckResult::new("nerve", audit.passed(), summary)
        .input(name)
        .detail(json!({
            "shape": d.shape(),
            "level_sizes": d.level_sizes(),
            "audit": audit,
            "dump": d.dump(),
        }))
}

pub fn nerve_cmd(inputs: &[Input], args: NerveArgs, common: &Common) -> Result<SuiteResult, CliError> {
    cap("--trunc", args.truncation, 8)?;
    let mut suite = SuiteResult::new("nerve").bound("trunc", args.truncation);
    if let Some(generators) = args.free {
        cap("--free", generators, 3)?;
        cap("--wordbound", args.word_bound, 8)?;
        cap("--trunc for free nerves", args.truncation, 4)?;
        suite = suite.bound("wordbound", args.word_bound);
        let d = if args.simplicial {
            nerve_free(generators, args.truncation, args.word_bound)
        } else {
            inerve_free(generators, args.truncation, args.word_bound)
        }
        .map_err(core_error)?;
        let name = format!("F{generators}");
        suite.push(timed(common.timings, || {
            nerve_check(&name, &d).reproduce(|| {
                format!("nerve --free {generators} --trunc {} --wordbound {}", args.truncation, args.word_bound)
            })
        }));
        return Ok(suite);
    }
    for input in inputs {
        cap_level(&input.name, arrows(&input.structure), args.truncation)?;
    }
    suite.inputs = inputs.iter().map(|i| i.digest.clone()).collect();
    let checks: Vec<CheckResult> = inputs
        .par_iter()
        .map(|input| {
            timed(common.timings, || {
                let d = if args.simplicial {
                    simplicial_nerve(&input.structure, args.truncation)
                } else {
                    invertible_nerve(&input.structure, args.truncation)
                        .unwrap_or_else(|| simplicial_nerve(&input.structure, args.truncation))
                };
                nerve_check(&input.name, &d)
                    .reproduce(|| format!("nerve {} --trunc {}", input.selector, args.truncation))
            })
        })
        .collect();
    suite.extend(checks);
    Ok(suite)
}

#[derive(Debug, Clone, Copy)]
pub struct GammaArgs {
    pub truncation: usize,
    pub roundtrip: bool,
    pub bousfield: bool,
    pub restriction: bool,
}

fn gamma_checks(name: &str, a: &FinMonoid, args: GammaArgs, selector: &str) -> Vec<CheckResult> {
    let n = args.truncation;
    let again = |flag: &str| format!("gamma {flag} {selector} --trunc {n}");
    let x = match t_construct(a, n) {
        Ok(x) => x,
        Err(e) => return vec![CheckResult::new("t", false, e.to_string()).input(name)],
    };
    let mut out = Vec::new();
    if n <= 3 {
        let audit = x.audit();
        out.push(
            CheckResult::new(
                "t functoriality",
                audit.passed(),
                format!("level sizes {:?}, {} composites audited", x.level_sizes(), audit.pairs_checked),
            )
            .input(name)
            .reproduce(|| again("--roundtrip"))
            .detail(&audit),
        );
    }
    if args.roundtrip {
        let segal = gamma_segal_check(&x, n);
        out.push(match segal {
            Ok(r) => {
                let summary = r.witness.as_ref().map(describe_witness).unwrap_or_else(|| "strict".into());
                CheckResult::new("gamma_segal", r.passed(), summary)
                    .input(name)
                    .reproduce(|| again("--roundtrip"))
                    .detail(&r)
            }
            Err(e) => CheckResult::new("gamma_segal", false, e.to_string()).input(name),
        });
        let extracted = extract_monoid(&x);
        let iso = extracted.as_ref().ok().and_then(|m| m.isomorphism_to(a));
        let report = roundtrip_check(&x);
        let passed = iso.is_some() && report.passed;
        let summary = match (&extracted, passed) {
            (Err(e), _) => format!("extraction failed: {e}"),
            (Ok(_), true) => "extraction is isomorphic to the input; t(extract(X)) ≅ X".to_string(),
            (Ok(_), false) => format!("round trip failed: {}", report.failures.join("; ")),
        };
        out.push(
            CheckResult::new("roundtrip", passed, summary)
                .input(name)
                .reproduce(|| again("--roundtrip"))
                .detail(json!({ "isomorphism": iso, "roundtrip": report })),
        );
    }
    if args.bousfield {
        let check = bousfield_gamma_check(&x, n);
        let extracted = bousfield_group_extract(&x);
        let group = a.is_group();
        let (verdict, detail) = match &check {
            Ok(r) => (r.passed(), serde_json::to_value(r).expect("reports serialize")),
            Err(e) => (false, json!(e.to_string())),
        };
        let inverses_ok = match &extracted {
            Ok(g) => (0..a.order()).all(|e| a.inverse_of(e) == Some(g.inv(e))),
            Err(_) => !group,
        };
        let passed = check.is_ok() && verdict == group && inverses_ok;
        let summary = format!(
            "Bousfield condition {}, input {} a group, extracted inverses {}",
            if verdict { "holds" } else { "fails" },
            if group { "is" } else { "is not" },
            match &extracted {
                Ok(g) => format!("{:?}", g.inverse_table()),
                Err(_) => "refused".to_string(),
            }
        );
        out.push(
            CheckResult::new("bousfield_gamma", passed, summary)
                .input(name)
                .reproduce(|| again("--bousfield"))
                .detail(detail),
        );
    }
    if args.restriction {
        out.push(match restriction_matches_nerve(a, n) {
            Ok(iso) => CheckResult::new(
                "restriction",
                iso.is_iso(),
                if iso.is_iso() { "restriction to Δ is the nerve" } else { "restriction differs from the nerve" },
            )
            .input(name)
            .reproduce(|| again("--restriction"))
            .detail(&iso),
            Err(e) => CheckResult::new("restriction", false, e.to_string()).input(name),
        });
    }
    out
}

pub fn gamma(inputs: &[Input], args: GammaArgs, common: &Common) -> Result<SuiteResult, CliError> {
    cap("--trunc for gamma", args.truncation, 4)?;
    if args.truncation < 2 {
        return Err(CliError::Input("gamma needs --trunc >= 2".into()));
    }
    let mut suite = SuiteResult::new("gamma").bound("trunc", args.truncation);
    let mut usable = Vec::new();
    for input in inputs {
        match input.structure.monoid() {
            Some(m) if m.is_commutative() => {
                cap_level(&input.name, m.order(), args.truncation)?;
                usable.push((input, m));
            }
            Some(_) => suite.skip(&input.name, "t(A) needs a commutative monoid"),
            None => suite.skip(&input.name, "t(A) needs a monoid"),
        }
    }
    if usable.is_empty() {
        return Err(CliError::Input("no input is a commutative monoid".into()));
    }
    suite.inputs = usable.iter().map(|(i, _)| i.digest.clone()).collect();
    let checks: Vec<Vec<CheckResult>> = usable
        .par_iter()
        .map(|(input, m)| {
            let started = std::time::Instant::now();
            let mut checks = gamma_checks(&input.name, m, args, &input.selector);
            if common.timings {
                let ms = started.elapsed().as_secs_f64() * 1e3;
                for c in &mut checks {
                    c.elapsed_ms = Some(ms);
                }
            }
            checks
        })
        .collect();
    suite.extend(checks.into_iter().flatten());
    Ok(suite)
}

#[derive(Debug, Clone, Copy)]
pub struct FiltrationArgs {
    pub variant: Variant,
    pub truncation: usize,
    pub word_bound: usize,
    pub attach: Option<usize>,
    pub stage: Option<usize>,
}

fn variant_flags(v: Variant) -> String {
    match v {
        Variant::Invertible { generators } => format!("--variant invertible --generators {generators}"),
        Variant::Bousfield => "--variant bousfield".to_string(),
    }
}

pub fn filtration(args: FiltrationArgs, common: &Common) -> Result<SuiteResult, CliError> {
    let FiltrationArgs {
        variant,
        truncation: j,
        word_bound: k,
        ..
    } = args;
    if let Variant::Invertible { generators } = variant {
        if generators == 0 {
            return Err(CliError::Input("--generators must be at least 1".into()));
        }
        cap("--generators", generators, 2)?;
    }
    cap("--trunc for filtrations", j, 4)?;
    cap("--wordbound for filtrations", k, 6)?;
    if j < 2 || k < 1 {
        return Err(CliError::Input("filtrations need --trunc >= 2 and --wordbound >= 1".into()));
    }
    let mut suite = SuiteResult::new("filtration").bound("trunc", j).bound("wordbound", k);
    let base = format!("filtration {} --trunc {j} --wordbound {k}", variant_flags(variant));

    if let Some(s) = args.stage {
        let nerve = FreeNerve::new(variant, j, k).map_err(core_error)?;
        let st = stage(&nerve, s).map_err(core_error)?;
        let labels: Vec<Vec<&str>> = (0..=j)
            .map(|l| st.stage.selected(l).iter().map(|&x| nerve.diagram().label(l, x)).collect())
            .collect();
        suite.push(
            CheckResult::new(
                format!("stage {s}"),
                true,
                format!("level sizes {:?}, closure added {:?}", st.level_sizes(), st.added_by_closure()),
            )
            .detail(json!({
                "k": s,
                "level_sizes": st.level_sizes(),
                "added_by_closure": st.added_by_closure(),
                "closure_reading": st.closure_reading.as_ref().map(|c| c.level_sizes()),
                "elements": labels,
            })),
        );
        return Ok(suite);
    }

    let chain = stage_chain_report(variant, k, j, k).map_err(core_error)?;
    let sizes: Vec<Vec<usize>> = chain.stages.iter().map(|s| s.level_sizes.clone()).collect();
    suite.push(
        CheckResult::new("chain monotone", chain.monotone, format!("stage sizes {sizes:?}"))
            .reproduce(|| base.clone())
            .detail(&chain.stages),
    );
    let exhaustion = chain.exhaustion.clone().unwrap_or_default();
    let missing: Vec<String> = exhaustion.iter().flat_map(|l| l.missing.iter().take(4).cloned()).collect();
    suite.push(
        CheckResult::new(
            "exhaustion",
            chain.exhausts() == Some(true),
            if missing.is_empty() {
                format!("Ψ_{k} is the whole truncated nerve")
            } else {
                format!("Ψ_{k} misses e.g. {}", missing.join(", "))
            },
        )
        .reproduce(|| base.clone())
        .detail(&exhaustion),
    );

    let steps: Vec<usize> = match args.attach {
        Some(step) => {
            if step == 0 || step >= k {
                return Err(CliError::Input(format!("--attach must lie in 1..{k}")));
            }
            vec![step]
        }
        None => (1..k).collect(),
    };
    let attachments: Vec<CheckResult> = steps
        .par_iter()
        .map(|&step| {
            timed(common.timings, || match attachment_compare(variant, step, j, k) {
                Ok(r) => {
                    let per_level: Vec<String> = r
                        .levels
                        .iter()
                        .map(|l| format!("{}:{}/{}", l.level, l.image_size, l.next_stage_size))
                        .collect();
                    let passed = r.well_defined && r.contained && r.surjective();
                    CheckResult::new(
                        format!("attachment {step}"),
                        passed,
                        format!(
                            "{} attaching maps, {} cells, well defined {}, inside Ψ_{} {}, image per level {}, iso {}",
                            r.attaching_maps,
                            r.cells.len(),
                            r.well_defined,
                            step + 1,
                            r.contained,
                            per_level.join(" "),
                            r.isomorphic()
                        ),
                    )
                    .reproduce(|| format!("{base} --attach {step}"))
                    .detail(&r)
                }
                Err(e) => CheckResult::new(format!("attachment {step}"), false, e.to_string()),
            })
        })
        .collect();
    suite.extend(attachments);
    Ok(suite)
}

/// Every catalog-level check in one report.
pub fn sweep(n_max: usize, truncation: usize, common: &Common) -> Result<SuiteResult, CliError> {
    use crate::inputs::from_catalog;
    cap("--nmax for sweep", n_max, 4)?;
    cap("--trunc for sweep", truncation, 3)?;
    if n_max < 2 || truncation < 2 {
        return Err(CliError::Input("sweep needs --nmax >= 2 and --trunc >= 2".into()));
    }
    let mut suite = SuiteResult::new("sweep").bound("nmax", n_max).bound("trunc", truncation);
    let monoids = from_catalog("corpus", None)?;
    let groups = from_catalog("groups-corpus", None)?;
    let abelian = from_catalog("abelian-corpus", None)?;
    suite.inputs = monoids.iter().map(|i| i.digest.clone()).collect();

    suite.extend(laws(n_max, common)?.checks);
    let condition_args = |kind, iff_group| ConditionArgs {
        kind,
        n_max,
        reduced: false,
        iff_group,
    };
    suite.extend(condition(&monoids, &condition_args(ConditionKind::Segal, false), common)?.checks);
    suite.extend(condition(&monoids, &condition_args(ConditionKind::Bousfield, true), common)?.checks);
    suite.extend(condition(&groups, &condition_args(ConditionKind::Xi, false), common)?.checks);
    let groupoid = FinGroupoid::indiscrete(2);
    suite.push(timed(common.timings, || {
        match strict_xi_check_with(&inerve_groupoid(&groupoid, n_max), CheckOptions::new(n_max)) {
            Ok(r) => {
                let summary = r.witness.as_ref().map(describe_witness).unwrap_or_else(|| "strict".into());
                CheckResult::new("xi", r.passed(), summary).input("indiscrete(2)").detail(&r)
            }
            Err(e) => CheckResult::new("xi", false, e.to_string()).input("indiscrete(2)"),
        }
    }));
    let gamma_args = GammaArgs {
        truncation,
        roundtrip: true,
        bousfield: true,
        restriction: true,
    };
    suite.extend(gamma(&abelian, gamma_args, common)?.checks);

    suite.push(timed(common.timings, || {
        let psi1 = invsegal::filtration::psi_invertible(1, 1, 3, 4);
        let target = reduce(&representable(Shape::Invertible, 1, 3));
        let iso = match (psi1, target) {
            (Ok(p), Ok(t)) => iso_check(&p.stage.to_diagram().0, &t).map(|r| r.is_iso()).unwrap_or(false),
            _ => false,
        };
        CheckResult::new("psi_1", iso, "Ψ_1 (invertible, one generator) ≅ reduce(IΔ[1]) at truncation 3")
            .reproduce(|| "filtration --variant invertible --stage 1".into())
    }));
    suite.push(timed(common.timings, || {
        let found = FreeNerve::new(Variant::Bousfield, 3, 4).and_then(|nerve| {
            let psi2 = stage(&nerve, 2)?;
            let inverse = nerve.find(1, "(x^-1)").is_some_and(|x| psi2.stage.contains(1, x));
            let squares = [[0, 0], [0, 1], [1, 0], [1, 1]]
                .iter()
                .all(|c| nerve.index_of(&from_gamma_coordinates(c)).is_some_and(|x| psi2.stage.contains(2, x)));
            Ok(inverse && squares)
        });
        CheckResult::new(
            "bousfield psi_2",
            found == Ok(true),
            "Bousfield Ψ_2 contains x⁻¹ and the 2-simplices with coordinates (0,0), (0,1), (1,0), (1,1)",
        )
        .reproduce(|| "filtration --variant bousfield --stage 2".into())
    }));
    let filtration_args = FiltrationArgs {
        variant: Variant::Invertible { generators: 1 },
        truncation: 3,
        word_bound: 4,
        attach: None,
        stage: None,
    };
    suite.extend(filtration(filtration_args, common)?.checks);
    Ok(suite)
}
