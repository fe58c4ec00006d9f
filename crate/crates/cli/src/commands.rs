//! One function per subcommand, generic over the scalar field.

use std::sync::Arc;

use liebider::field::FieldTag;
use liebider::free_lie::{jk_report, FreeLie, TruncatedQuotient};
use liebider::graded_window::*;
use liebider::lie::json::vector_from_json;
use liebider::lie::{LModule, LieAlgebra};
use liebider::linalg::Subspace;
use liebider::maps::*;
use liebider::oracle::{self, EnumerationBudget};
use liebider::reproduce;
use liebider::towers::*;
use liebider::{Field, Fp, Rational};
use serde_json::{json, Value};

use crate::input::{input_err, CliResult, Input, InputError, Source};

/// A finished run: the JSON report, a text rendering, and whether every
/// verification in it held.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn new(json: Value, text: impl Into<String>, ok: bool) -> Self {
        Outcome { json, text: text.into(), ok }
    }
}

fn subspace_json<F: Field>(l: &LieAlgebra<F>, s: &Subspace<F>) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| l.element_string(v)).collect::<Vec<_>>(),
    })
}

fn named_triples(names: &[String], ts: &[(usize, usize, usize)], third: &[String]) -> Vec<Value> {
    ts.iter().map(|&(i, j, k)| json!([names[i], names[j], third[k]])).collect()
}

pub fn check<F: Field>(input: &Input) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let l = m.lie();
    let jac = l.check_jacobi();
    let module = m.check_module();
    let ok = jac.is_empty() && module.is_empty();
    let json = json!({
        "field": F::tag().to_json(),
        "dim": l.dim(),
        "module_dim": m.dim(),
        "jacobi_violations": named_triples(l.names(), &jac, l.names()),
        "module_violations": named_triples(l.names(), &module, m.names()),
        "valid": ok,
    });
    let mut text = format!("dim {} over {}: ", l.dim(), F::tag());
    if ok {
        text.push_str("Jacobi and module axioms hold");
    } else {
        if let Some(&(i, j, k)) = jac.first() {
            let n = l.names();
            text.push_str(&format!("Jacobi fails on ({}, {}, {}); ", n[i], n[j], n[k]));
        }
        if let Some(&(i, j, k)) = module.first() {
            text.push_str(&format!("module axiom fails on ({}, {}, {})", l.names()[i], l.names()[j], m.names()[k]));
        }
    }
    Ok(Outcome::new(json, text, ok))
}

pub fn center<F: Field>(input: &Input) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let l = m.lie();
    let z = l.center();
    let zm = m.invariants();
    let zd = m.centralizer_of_derived();
    let json = json!({
        "center": subspace_json(l, &z),
        "centerless": z.is_zero(),
        "module_invariants_dim": zm.dim(),
        "centralizer_of_derived_dim": zd.dim(),
    });
    let text = format!(
        "center dim {} {:?}; Z_M(L) dim {}; Z_M(L') dim {}",
        z.dim(),
        subspace_json(l, &z)["basis"],
        zm.dim(),
        zd.dim()
    );
    Ok(Outcome::new(json, text, true))
}

pub fn derived<F: Field>(input: &Input, limit: usize) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let l = m.lie();
    let d = l.derived();
    let series: Vec<usize> = l.lower_central_series(limit).iter().map(Subspace::dim).collect();
    let json = json!({
        "derived": subspace_json(l, &d),
        "perfect": d.is_full(),
        "nilpotent": l.is_nilpotent(),
        "lower_central_series_dims": series,
    });
    let text = format!("derived dim {} of {}; perfect {}; lower central series {:?}", d.dim(), l.dim(), d.is_full(), series);
    Ok(Outcome::new(json, text, true))
}

fn linear_report<F: Field>(s: &LinearMapSpace<F>, check: fn(&LModule<F>, &LinearMap<F>) -> bool, m: &LModule<F>) -> Outcome {
    let ok = s.basis_maps().iter().all(|f| check(m, f));
    let json = s.report(json!({ "basis_passes_definition": ok }));
    Outcome::new(json, format!("{}: dim {}", s.name, s.dim()), ok)
}

pub fn centroid_cmd<F: Field>(input: &Input) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    Ok(linear_report(&centroid(&m), is_centroid, &m))
}

pub fn derivations_cmd<F: Field>(input: &Input) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    Ok(linear_report(&derivations(&m), is_derivation, &m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BiderKind {
    Skew,
    Symmetric,
    Trivial,
    Special,
}

pub fn bider<F: Field>(input: &Input, kind: BiderKind) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let s = match kind {
        BiderKind::Skew => skew_biderivations(&m),
        BiderKind::Symmetric => symmetric_biderivations(&m),
        BiderKind::Trivial => trivial_biderivations(&m),
        BiderKind::Special => special_biderivations(&m),
    };
    let basis = s.basis_maps();
    let members = basis.iter().all(|d| is_biderivation(&m, d));
    let mut checks = json!({ "basis_are_biderivations": members });
    let mut ok = members;
    if s.symmetry == Symmetry::Skew {
        let (bl, ena, q) = (
            basis.iter().all(|d| verify_lemma_bl(&m, d)),
            basis.iter().all(|d| verify_identity_ena(&m, d)),
            basis.iter().all(|d| verify_identity_q(&m, d)),
        );
        checks["identity_bl"] = json!(bl);
        checks["identity_ena"] = json!(ena);
        checks["identity_q"] = json!(q);
        ok &= bl && ena && q;
    }
    Ok(Outcome::new(s.report(checks), format!("{}: dim {}", s.name, s.dim()), ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CommutingKind {
    All,
    Central,
    Special,
}

pub fn commuting<F: Field>(input: &Input, kind: CommutingKind) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let s = match kind {
        CommutingKind::All => commuting_maps(&m),
        CommutingKind::Central => central_maps(&m),
        CommutingKind::Special => special_commuting_maps(&m),
    };
    Ok(linear_report(&s, is_commuting, &m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DecomposeKind {
    Bider,
    Commuting,
}

// Linear maps are a list of image vectors; skew bilinear maps a list of
// `{"i", "j", "value"}` entries with `i < j`. Both match the report output,
// optionally wrapped as `{"map": ...}`.
fn read_linear<F: Field>(v: &Value, n: usize, d: usize) -> CliResult<LinearMap<F>> {
    let arr = v.as_array().ok_or_else(|| InputError("a linear map is an array of image vectors".into()))?;
    if arr.len() != n {
        return input_err(format!("linear map needs {n} images, got {}", arr.len()));
    }
    let images = arr.iter().map(vector_from_json::<F>).collect::<Result<Vec<_>, _>>()?;
    if images.iter().any(|v| v.max_index().is_some_and(|k| k >= d)) {
        return input_err(format!("image index out of range for dimension {d}"));
    }
    Ok(LinearMap::from_images(d, images))
}

fn read_bilinear<F: Field>(v: &Value, n: usize, d: usize) -> CliResult<BilinearMap<F>> {
    let arr = v.as_array().ok_or_else(|| InputError("a bilinear map is an array of {i, j, value} entries".into()))?;
    let mut out = BilinearMap::zero(n, d, Symmetry::Skew);
    for e in arr {
        let (Some(i), Some(j), Some(val)) = (e.get("i").and_then(Value::as_u64), e.get("j").and_then(Value::as_u64), e.get("value")) else {
            return input_err("bilinear entries need \"i\", \"j\" and \"value\"");
        };
        let (i, j) = (i as usize, j as usize);
        if i >= j || j >= n {
            return input_err(format!("bilinear entry ({i}, {j}) must have i < j < {n}"));
        }
        let val = vector_from_json::<F>(val)?;
        if val.max_index().is_some_and(|k| k >= d) {
            return input_err(format!("value index out of range for dimension {d}"));
        }
        out.values[pair_index(n, i, j, Symmetry::Skew)] = val;
    }
    Ok(out)
}

pub fn decompose<F: Field>(input: &Input, kind: DecomposeKind, map: Option<&Source>) -> CliResult<Outcome> {
    let m = input.load::<F>()?;
    let (n, d) = (m.lie().dim(), m.dim());
    let doc = match map {
        Some(Source::File { doc, .. }) => Some(doc.get("map").unwrap_or(doc).clone()),
        Some(Source::Catalog(s)) => return input_err(format!("--map takes @file.json, got `{s}`")),
        None => None,
    };
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut ok = true;
    match kind {
        DecomposeKind::Bider => {
            let cent = centroid(&m);
            let triv = trivial_biderivations(&m);
            let maps = match &doc {
                Some(v) => vec![read_bilinear::<F>(v, n, d)?],
                None => skew_biderivations(&m).basis_maps(),
            };
            for delta in maps {
                match decompose_biderivation_with(&m, &delta, &cent, &triv) {
                    Ok(r) => {
                        lines.push(format!("status {}", r.status.as_str()));
                        results.push(r.to_json());
                    }
                    Err(e) => {
                        ok = false;
                        lines.push(format!("rejected: {e}"));
                        results.push(json!({ "error": e.to_string() }));
                    }
                }
            }
        }
        DecomposeKind::Commuting => {
            let cent = centroid(&m);
            let central = central_maps(&m);
            let maps = match &doc {
                Some(v) => vec![read_linear::<F>(v, n, d)?],
                None => commuting_maps(&m).basis_maps(),
            };
            for f in maps {
                match decompose_commuting_with(&m, &f, &cent, &central) {
                    Ok(r) => {
                        let mut line = format!("split {}", r.success);
                        if let Some(w) = r.witnesses.first() {
                            line.push_str(&format!(
                                "; witness f([{x},{y}]) = {} but {x}·f({y}) = {}",
                                m.lie().element_string(&w.lhs),
                                m.lie().element_string(&w.rhs),
                                x = m.lie().name(w.x),
                                y = m.lie().name(w.y),
                            ));
                        }
                        lines.push(line);
                        results.push(r.to_json(&m));
                    }
                    Err(e) => {
                        ok = false;
                        lines.push(format!("rejected: {e}"));
                        results.push(json!({ "error": e.to_string() }));
                    }
                }
            }
        }
    }
    let text = if lines.is_empty() { "space is zero; nothing to decompose".to_string() } else { lines.join("\n") };
    Ok(Outcome::new(json!({ "decompositions": results }), text, ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TowerKind {
    Center,
    Module,
}

pub fn tower<F: Field>(input: &Input, kind: TowerKind, depth: usize, audit: bool) -> CliResult<Outcome> {
    let m = Arc::new(input.load::<F>()?);
    let mut ok = true;
    let (mut json, mut text) = match kind {
        TowerKind::Center => {
            let t = center_tower(m.lie(), depth)?;
            let text = format!("center tower dims {:?}; terminated {}; depth limit hit {}", t.dims(), t.terminated, t.depth_limit_hit);
            (t.to_json(), text)
        }
        TowerKind::Module => {
            let t = module_tower(&m, depth)?;
            let text = format!("module tower dims {:?}; terminated {}; depth limit hit {}", t.dims(), t.terminated, t.depth_limit_hit);
            (t.to_json(), text)
        }
    };
    if audit {
        match kind {
            TowerKind::Center => {
                let a = tower_audit_biderivations(m.lie()).map_err(|e| InputError(e.to_string()))?;
                ok &= a.passed();
                text.push_str(&format!("\naudit: passed {} (source {}, target {}, kernel {})", a.passed(), a.dim_source, a.dim_target, a.kernel_dim));
                json["audit"] = a.to_json();
            }
            TowerKind::Module => {
                let steps = tower_audit_commuting(&m, depth)?;
                let passed = steps.iter().all(CommutingAudit::passed);
                ok &= passed;
                text.push_str(&format!("\naudit: {} steps, passed {passed}", steps.len()));
                json["audit"] = Value::Array(steps.iter().map(CommutingAudit::to_json).collect());
            }
        }
    }
    Ok(Outcome::new(json, text, ok))
}

pub enum FreeLieQuery {
    Jk,
    Component(Vec<usize>),
    Counts,
    Quotient,
}

pub fn free_lie(query: FreeLieQuery, degree: usize) -> CliResult<Outcome> {
    match query {
        FreeLieQuery::Jk => {
            let r = jk_report::<liebider::Q>();
            let text = format!(
                "{} in I+J: {}; dim I = {}, dim J = {}, component dim {}",
                r.target, r.target_in_sum, r.i_dim, r.j_dim, r.component_dim
            );
            Ok(Outcome::new(r.to_json(), text, r.holds()))
        }
        FreeLieQuery::Component(md) => {
            if md.len() != 3 {
                return input_err("multidegrees have three entries (generators x1, x2, x3)");
            }
            let total: usize = md.iter().sum();
            if total == 0 || total > degree {
                return input_err(format!("multidegree total {total} must lie in 1..={degree} (raise --degree)"));
            }
            let free = FreeLie::<liebider::Q>::new(3, degree);
            let names: Vec<String> = free.component(&md).iter().map(|&i| free.hall()[i].name.clone()).collect();
            let text = format!("component {md:?}: dim {}\n{}", names.len(), names.join("\n"));
            Ok(Outcome::new(json!({ "multidegree": md, "dim": names.len(), "hall": names }), text, true))
        }
        FreeLieQuery::Counts => {
            let free = FreeLie::<liebider::Q>::new(3, degree);
            let counts = free.count_by_degree();
            Ok(Outcome::new(json!({ "generators": 3, "by_degree": counts }), format!("Hall elements by degree: {counts:?}"), true))
        }
        FreeLieQuery::Quotient => {
            let q = TruncatedQuotient::<liebider::Q>::new(degree);
            let l = &q.algebra;
            let z = l.center();
            let comps: Vec<Value> = {
                let mut by: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
                for md in &q.multidegree {
                    *by.entry(md.clone()).or_default() += 1;
                }
                by.into_iter().map(|(md, n)| json!({ "multidegree": md, "dim": n })).collect()
            };
            let json = json!({
                "degree": degree,
                "dim": l.dim(),
                "basis": l.names(),
                "components": comps,
                "center": subspace_json(l, &z),
                "jacobi_violations": l.check_jacobi().len(),
            });
            Ok(Outcome::new(json, format!("F/(I+J) up to degree {degree}: dim {}, center dim {}", l.dim(), z.dim()), true))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WindowSpace {
    Summary,
    Centroid,
    Skew,
    Audit,
    Lift,
    Invariants,
    Symmetric,
}

pub struct WindowArgs {
    pub family: String,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub q: Option<Rational>,
    pub n: usize,
    pub space: WindowSpace,
    pub ansatz: bool,
    pub ii_cocycle: bool,
}

fn window_err(e: WindowError) -> InputError {
    InputError(e.to_string())
}

pub fn window<F: Field>(args: &WindowArgs) -> CliResult<Outcome> {
    if args.family == "msl2" {
        return module_window::<F>(args);
    }
    let mut family = Family::parse(&args.family, args.a.clone(), args.b.clone(), args.q.clone()).map_err(window_err)?;
    if let Family::WTilde0m1 { ii_cocycle } = &mut family {
        *ii_cocycle = args.ii_cocycle;
    }
    if args.space == WindowSpace::Lift {
        if !matches!(family, Family::WTilde0m1 { .. }) {
            return input_err("--space lift applies to wtilde0m1");
        }
        let b = args.b.clone().ok_or_else(|| InputError("--space lift needs --b".into()))?;
        let r = lift_obstruction_with::<F>(&b, args.n, args.ii_cocycle).map_err(window_err)?;
        let text = match &r.inconsistent_at {
            Some((x, y, z)) => format!("b = {b}: no lift; inconsistent at ({x}, {y}, {z})"),
            None => format!("b = {b}: lift exists; {} forced central values", r.forced.len()),
        };
        return Ok(Outcome::new(r.to_json(), text, true));
    }
    let w = WindowInstance::<F>::instantiate(family, args.n).map_err(window_err)?;
    let mut json = json!({ "window": w.summary() });
    let jacobi_ok = json["window"]["jacobi_violations"] == 0;
    let text = match args.space {
        WindowSpace::Summary => format!("{} N={}: dim {}, inner radius {}", w.family.name(), w.n, w.dim(), w.inner),
        WindowSpace::Centroid => {
            let (s, stats) = w.window_centroid(args.ansatz);
            json["space"] = s.report(json!({}));
            json["stats"] = stats.to_json();
            format!("window centroid: dim {} ({} conditions skipped)", s.dim(), stats.skipped)
        }
        WindowSpace::Skew => {
            let (s, stats) = w.window_skew_biderivations(args.ansatz);
            let member = s.contains(&bracket_on_domain(&w, &w.inner_indices()));
            json["space"] = s.report(json!({ "bracket_is_member": member }));
            json["stats"] = stats.to_json();
            format!("window skew biderivations: dim {}; bracket is a member: {member}", s.dim())
        }
        WindowSpace::Audit => {
            let a = w.window_center_audit().map_err(window_err)?;
            json["audit"] = a.to_json();
            format!("center audit passed {} (source {}, target {}, kernel {})", a.passed(), a.dim_source, a.dim_target, a.kernel_dim)
        }
        WindowSpace::Lift => unreachable!("handled above"),
        WindowSpace::Invariants | WindowSpace::Symmetric => {
            return input_err("--space invariants/symmetric apply to msl2");
        }
    };
    let ok = jacobi_ok && json.get("audit").is_none_or(|a| a["passed"] == true);
    Ok(Outcome::new(json, text, ok))
}

fn module_window<F: Field>(args: &WindowArgs) -> CliResult<Outcome> {
    let a = args.a.clone().ok_or_else(|| InputError("msl2 needs --a".into()))?;
    let b = args.b.clone().unwrap_or_else(|| liebider::field::rational(0, 1));
    let m = window_module::<F>(a, b, args.n).map_err(window_err)?;
    let mut json = json!({ "module": m.summary() });
    let text = match args.space {
        WindowSpace::Summary => format!("M window N={}: dim {}", args.n, m.module.dim()),
        WindowSpace::Invariants => {
            let z = m.invariants();
            let names: Vec<String> = z.basis().iter().map(|v| v.iter().map(|(k, c)| format!("{c}·{}", m.module.names()[*k])).collect::<Vec<_>>().join(" + ")).collect();
            json["invariants"] = json!({ "dim": z.dim(), "basis": names });
            format!("Z_M(sl2): dim {} {:?}", z.dim(), names)
        }
        WindowSpace::Symmetric => {
            let (s, stats) = m.symmetric_biderivations();
            let mut members = Vec::new();
            for k in -2..=2 {
                let dk = m.delta_k(k).map_err(window_err)?.map(|d| s.contains(&d));
                let dpk = m.delta_prime_k(k).map_err(window_err)?.map(|d| s.contains(&d));
                members.push(json!({ "k": k, "delta": dk, "delta_prime": dpk }));
            }
            json["space"] = s.report(json!({}));
            json["stats"] = stats.to_json();
            json["members"] = Value::Array(members);
            format!("symmetric biderivations into the window: dim {}", s.dim())
        }
        _ => return input_err("msl2 supports --space summary, invariants or symmetric"),
    };
    let ok = json["module"]["module_violations"] == 0;
    Ok(Outcome::new(json, text, ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleSpace {
    SkewBider,
    SymBider,
    Commuting,
}

pub fn oracle_cmd(input: &Input, tag: FieldTag, space: OracleSpace, budget: EnumerationBudget) -> CliResult<Outcome> {
    match tag {
        FieldTag::Rationals => input_err("the oracle enumerates over a prime field; pass --field 3, 5, 7, 11 or 13"),
        FieldTag::Prime(3) => oracle_at::<3>(input, space, budget),
        FieldTag::Prime(5) => oracle_at::<5>(input, space, budget),
        FieldTag::Prime(7) => oracle_at::<7>(input, space, budget),
        FieldTag::Prime(11) => oracle_at::<11>(input, space, budget),
        FieldTag::Prime(13) => oracle_at::<13>(input, space, budget),
        FieldTag::Prime(p) => input_err(format!("prime {p} is not built in; supported: 3, 5, 7, 11, 13")),
    }
}

fn oracle_at<const P: u64>(input: &Input, space: OracleSpace, budget: EnumerationBudget) -> CliResult<Outcome> {
    let m = input.load::<Fp<P>>()?;
    let (found, solver) = match space {
        OracleSpace::SkewBider => (oracle::enumerate_skew_biderivations(&m, budget), skew_biderivations(&m).space),
        OracleSpace::SymBider => (oracle::enumerate_symmetric_biderivations(&m, budget), symmetric_biderivations(&m).space),
        OracleSpace::Commuting => (oracle::enumerate_commuting(&m, budget), commuting_maps(&m).space),
    };
    let o = found.map_err(|e| InputError(e.to_string()))?;
    let equal = o.space == solver;
    let mut json = o.to_json();
    json["solver_dim"] = json!(solver.dim());
    json["equal"] = json!(equal);
    let text = format!(
        "F_{P}: {} maps pass ({} unknowns, {} nodes); oracle dim {}, solver dim {}; equal {equal}",
        o.members.len(),
        o.unknowns,
        o.visited,
        o.space.dim(),
        solver.dim()
    );
    Ok(Outcome::new(json, text, equal))
}

pub enum ReproduceWhat {
    List,
    Item(String),
    Criterion(usize),
    Acceptance,
    All,
}

pub fn reproduce_cmd(what: ReproduceWhat) -> CliResult<Outcome> {
    let reports = match what {
        ReproduceWhat::List => {
            let names = reproduce::item_names();
            return Ok(Outcome::new(json!({ "items": names, "criteria": reproduce::CRITERION_COUNT }), names.join("\n"), true));
        }
        ReproduceWhat::Item(name) => vec![reproduce::run_item(&name).map_err(|e| InputError(e.to_string()))?],
        ReproduceWhat::Criterion(k) => vec![reproduce::run_criterion(k).map_err(|e| InputError(e.to_string()))?],
        ReproduceWhat::Acceptance => (1..=reproduce::CRITERION_COUNT).map(|k| reproduce::run_criterion(k).expect("index in range")).collect(),
        ReproduceWhat::All => {
            let mut v: Vec<_> = reproduce::item_names().into_iter().map(|n| reproduce::run_item(n).expect("registered")).collect();
            v.extend((1..=reproduce::CRITERION_COUNT).map(|k| reproduce::run_criterion(k).expect("index in range")));
            v
        }
    };
    let ok = reports.iter().all(|r| r.passed());
    let mut text: Vec<String> = reports.iter().map(|r| r.line()).collect();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    text.push(format!("{} passed, {failed} failed", reports.len() - failed));
    let json = json!({ "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(), "passed": ok });
    Ok(Outcome::new(json, text.join("\n"), ok))
}
