use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use fockpoly::algebra::{integer, parse_rational, Polynomial, Rational};
use fockpoly::invariants::{
    lax_trace_check, power_traces, prodet_cauchy, AlgorithmRegistry, Antisymmetrized,
};
use fockpoly::operators::{
    cauchy_j, cauchy_j_closed, cauchy_k, cauchy_k_closed, commutator, first_disagreement,
    lowering_constant, LinearOperator,
};
use fockpoly::partitions::{cauchy_h, enumerate_partitions, factorial, to_symbol, PartitionSymbol};
use fockpoly::random;
use fockpoly::symfun::{
    c_from_power_sums, eval_elementary, eval_power_sum, eval_wronski, w_from_power_sums,
    VariableVector,
};
use fockpoly::symgroup::class_sizes;
use fockpoly::{Error, ExactMatrix};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::output::{table, OutputDocument};
use crate::{Cli, Command, Status, Target};

/// Largest `n` for which `classes --verify` enumerates `S_n`.
pub const VERIFY_CLASSES_MAX: u32 = 8;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Core(Error::BudgetExceeded(_)) => Status::BudgetExceeded,
            _ => Status::Usage,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// A document plus whether every check it reports passed.
pub type Report = (OutputDocument, bool);

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Jpoly {
            k,
            plus,
            closed,
            check,
        } => Ok(jpoly(*k, *plus, *closed, *check)),
        Command::Classes { n, verify } => classes(*n, *verify),
        Command::Invariants { file, methods } => invariants(file, methods),
        Command::Convert { to, k, values } => convert(*to, *k, values),
        Command::Bench {
            nmax,
            kmax,
            repeats,
            antisym_budget,
        } => bench(*nmax, *kmax, *repeats, *antisym_budget, cli.seed),
        Command::Verify {
            all,
            checks,
            max_k,
            max_n,
        } => verify(*all, checks, *max_k, *max_n, cli.seed),
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn tuple(values: &[Rational]) -> String {
    format!("({})", strings(values).join(", "))
}

fn terms_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let symbol = PartitionSymbol::from_monomial(m);
            json!({
                "monomial": m.to_string(),
                "symbol": symbol.to_string(),
                "coefficient": c.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn jpoly(k: u32, plus: bool, closed: bool, check: bool) -> Report {
    let variant = if plus { "plus" } else { "minus" };
    let iterate = || if plus { cauchy_k(k) } else { cauchy_j(k) };
    let from_partitions = || {
        if plus {
            cauchy_k_closed(k)
        } else {
            cauchy_j_closed(k)
        }
    };

    if check {
        let (a, b) = (iterate(), from_partitions());
        let agree = a == b;
        let plain = format!(
            "iterative: {a}\nclosed:    {b}\nagree: {}",
            if agree { "yes" } else { "NO" }
        );
        let structured = json!({
            "k": k,
            "variant": variant,
            "iterative": a.to_string(),
            "closed": b.to_string(),
            "agree": agree,
        });
        return (OutputDocument::new(plain, structured), agree);
    }

    let (form, p) = if closed {
        ("closed", from_partitions())
    } else {
        ("iterative", iterate())
    };
    let structured = json!({
        "k": k,
        "variant": variant,
        "form": form,
        "polynomial": p.to_string(),
        "terms": terms_json(&p),
    });
    (OutputDocument::new(p.to_string(), structured), true)
}

pub fn classes(n: u32, verify: bool) -> Result<Report, CliError> {
    if verify && n > VERIFY_CLASSES_MAX {
        return Err(Error::BudgetExceeded(format!(
            "--verify enumerates S_{n}; limit is n <= {VERIFY_CLASSES_MAX}"
        ))
        .into());
    }
    let tally = if verify { Some(class_sizes(n)?) } else { None };
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut all_match = true;
    for lambda in enumerate_partitions(n) {
        let alpha = to_symbol(&lambda);
        let h = cauchy_h(&alpha);
        let mut row = vec![lambda.to_string(), alpha.to_string(), h.to_string()];
        let mut record = json!({
            "partition": lambda.parts(),
            "symbol": alpha.to_string(),
            "size": h.to_string(),
        });
        if let Some(tally) = &tally {
            let counted = tally.get(&alpha).copied().unwrap_or(0);
            let ok = h == counted.into();
            all_match &= ok;
            row.push(counted.to_string());
            row.push(if ok { "yes" } else { "NO" }.into());
            record["enumerated"] = json!(counted.to_string());
            record["match"] = json!(ok);
        }
        rows.push(row);
        records.push(record);
    }
    let header: &[&str] = if verify {
        &["partition", "symbol", "size", "enumerated", "match"]
    } else {
        &["partition", "symbol", "size"]
    };
    let total = factorial(n);
    let plain = format!("{}\ntotal {total}", table(header, &rows));
    let structured = json!({ "n": n, "rows": records, "total": total.to_string() });
    Ok((OutputDocument::new(plain, structured), all_match))
}

fn read_matrix(path: &Path) -> Result<ExactMatrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(ExactMatrix::from_json(&text)?)
}

pub fn invariants(path: &Path, methods: &[String]) -> Result<Report, CliError> {
    let a = read_matrix(path)?;
    let n = a.dim();
    let registry = AlgorithmRegistry::default();
    let names: Vec<&str> = methods.iter().map(String::as_str).collect();
    let selected = registry.select(&names)?;
    if selected.is_empty() {
        return Err(CliError::Usage("no methods selected".into()));
    }
    for algorithm in &selected {
        if let Some(k) = (1..=n).find(|&k| !algorithm.admits(n, k)) {
            return Err(Error::BudgetExceeded(format!(
                "{} cannot compute J_{k} for n = {n} within its budget",
                algorithm.name()
            ))
            .into());
        }
    }

    let traces = power_traces(&a, n as u32);
    let results = selected
        .iter()
        .map(|alg| Ok((alg.name(), alg.prodets(&a)?)))
        .collect::<Result<Vec<_>, Error>>()?;

    let reference = &results[0].1;
    let mut diffs = Vec::new();
    for k in 0..n {
        if results.iter().any(|(_, v)| v[k] != reference[k]) {
            let parts: Vec<String> = results
                .iter()
                .map(|(name, v)| format!("{name} = {}", v[k]))
                .collect();
            diffs.push(format!("J_{}: {}", k + 1, parts.join(", ")));
        }
    }
    let agree = diffs.is_empty();

    let mut lines = vec![format!("n = {n}"), format!("I = {}", tuple(&traces))];
    for (name, values) in &results {
        lines.push(format!("J[{name}] = {}", tuple(values)));
    }
    lines.push(format!("agreement: {}", if agree { "yes" } else { "NO" }));
    lines.extend(diffs.iter().cloned());

    let mut by_method = serde_json::Map::new();
    for (name, values) in &results {
        by_method.insert(name.to_string(), json!(strings(values)));
    }
    let structured = json!({
        "n": n,
        "I": strings(&traces),
        "J": by_method,
        "agree": agree,
        "differences": diffs,
    });
    Ok((OutputDocument::new(lines.join("\n"), structured), agree))
}

pub fn convert(to: Target, k: u32, values: &[String]) -> Result<Report, CliError> {
    if values.len() < k as usize {
        return Err(CliError::Usage(format!(
            "need power sums s_1..s_{k}, got {} value(s)",
            values.len()
        )));
    }
    let s = values
        .iter()
        .map(|v| parse_rational(v))
        .collect::<Result<Vec<_>, _>>()?;
    let (name, value) = match to {
        Target::Elementary => ("elementary", c_from_power_sums(k, &s)),
        Target::Wronski => ("wronski", w_from_power_sums(k, &s)),
    };
    let structured = json!({
        "k": k,
        "to": name,
        "power_sums": strings(&s[..k as usize]),
        "value": value.to_string(),
    });
    Ok((OutputDocument::new(value.to_string(), structured), true))
}

pub fn bench(
    nmax: usize,
    kmax: usize,
    repeats: usize,
    antisym_budget: u64,
    seed: u64,
) -> Result<Report, CliError> {
    if nmax == 0 || kmax == 0 || repeats == 0 {
        return Err(CliError::Usage(
            "nmax, kmax and repeats must be positive".into(),
        ));
    }
    let mut registry = AlgorithmRegistry::default();
    registry.register(Box::new(Antisymmetrized {
        budget: antisym_budget,
    }));
    let names = registry.names();
    let mut rng = random::rng(seed);
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut agree = true;

    for n in 1..=nmax {
        let a = random::integer_matrix(&mut rng, n);
        for k in 1..=kmax.min(n) {
            let mut value: Option<Rational> = None;
            let mut cells = Vec::new();
            let mut timings = serde_json::Map::new();
            for algorithm in registry.iter() {
                if !algorithm.admits(n, k) {
                    cells.push("skipped".to_string());
                    timings.insert(algorithm.name().into(), json!("skipped"));
                    continue;
                }
                let mut best = u128::MAX;
                let mut result = None;
                for _ in 0..repeats {
                    let start = Instant::now();
                    let v = algorithm.prodet(&a, k)?;
                    best = best.min(start.elapsed().as_nanos());
                    result = Some(v);
                }
                let result = result.expect("repeats >= 1");
                match &value {
                    None => value = Some(result),
                    Some(v) => agree &= *v == result,
                }
                let nanos = u64::try_from(best).unwrap_or(u64::MAX);
                cells.push(nanos.to_string());
                timings.insert(algorithm.name().into(), json!(nanos));
            }
            let value = value.map(|v| v.to_string()).unwrap_or_default();
            let mut row = vec![n.to_string(), k.to_string(), value.clone()];
            row.extend(cells);
            rows.push(row.join(","));
            records.push(json!({ "n": n, "k": k, "J": value, "ns": timings }));
        }
    }

    let mut header = vec!["n".to_string(), "k".into(), "J".into()];
    header.extend(names.iter().map(|m| format!("{m}_ns")));
    let plain = std::iter::once(header.join(","))
        .chain(rows)
        .collect::<Vec<_>>()
        .join("\n");
    let structured = json!({
        "seed": seed,
        "repeats": repeats,
        "antisym_budget": antisym_budget,
        "methods": names,
        "rows": records,
        "agree": agree,
    });
    Ok((OutputDocument::new(plain, structured), agree))
}

pub const CHECKS: [&str; 8] = [
    "closed-form",
    "sign-pattern",
    "class-sizes",
    "lowering",
    "operators",
    "conversions",
    "prodeterminants",
    "lax",
];

pub fn verify(
    all: bool,
    checks: &[String],
    max_k: u32,
    max_n: usize,
    seed: u64,
) -> Result<Report, CliError> {
    if max_k == 0 || max_n == 0 {
        return Err(CliError::Usage(
            "--max-k and --max-n must be positive".into(),
        ));
    }
    if let Some(bad) = checks.iter().find(|c| !CHECKS.contains(&c.as_str())) {
        return Err(CliError::Usage(format!(
            "unknown check `{bad}`; available: {}",
            CHECKS.join(", ")
        )));
    }
    let selected: Vec<&str> = if all || checks.is_empty() {
        CHECKS.to_vec()
    } else {
        CHECKS
            .iter()
            .copied()
            .filter(|c| checks.iter().any(|x| x == c))
            .collect()
    };

    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut all_passed = true;
    for name in selected {
        let start = Instant::now();
        let result = run_check(name, max_k, max_n, seed)?;
        let millis = start.elapsed().as_millis() as u64;
        let (passed, detail) = match &result {
            Ok(d) => (true, d.clone()),
            Err(d) => (false, d.clone()),
        };
        all_passed &= passed;
        lines.push(format!(
            "{} {name}: {detail}",
            if passed { "PASS" } else { "FAIL" }
        ));
        records.push(json!({ "check": name, "passed": passed, "detail": detail, "ms": millis }));
    }
    lines.push(format!(
        "verify: {}",
        if all_passed { "all passed" } else { "FAILED" }
    ));
    let structured = json!({
        "seed": seed,
        "max_k": max_k,
        "max_n": max_n,
        "checks": records,
        "passed": all_passed,
    });
    Ok((
        OutputDocument::new(lines.join("\n"), structured),
        all_passed,
    ))
}

type CheckResult = Result<String, String>;

fn run_check(name: &str, max_k: u32, max_n: usize, seed: u64) -> Result<CheckResult, CliError> {
    Ok(match name {
        "closed-form" => check_closed_form(max_k),
        "sign-pattern" => check_sign_pattern(max_k),
        "class-sizes" => check_class_sizes(max_k.min(VERIFY_CLASSES_MAX))?,
        "lowering" => check_lowering(max_k),
        "operators" => check_operators(max_k),
        "conversions" => check_conversions(max_k, seed),
        "prodeterminants" => check_prodeterminants(max_n, seed)?,
        "lax" => check_lax(max_n, seed)?,
        other => unreachable!("unknown check {other}"),
    })
}

fn check_closed_form(max_k: u32) -> CheckResult {
    for k in 1..=max_k {
        if cauchy_j(k) != cauchy_j_closed(k) {
            return Err(format!("j_{k} differs from its partition formula"));
        }
        if cauchy_k(k) != cauchy_k_closed(k) {
            return Err(format!("k_{k} differs from its partition formula"));
        }
    }
    Ok(format!(
        "j_k and k_k match the partition formula for k <= {max_k}"
    ))
}

fn check_sign_pattern(max_k: u32) -> CheckResult {
    for k in 1..=max_k {
        let (j, kk) = (cauchy_j(k), cauchy_k(k));
        if j.len() != kk.len() || j.terms().any(|(m, c)| c.abs() != kk.coefficient(m)) {
            return Err(format!("|j_{k}| and k_{k} differ"));
        }
    }
    Ok(format!("|coeff j_k| = coeff k_k for k <= {max_k}"))
}

fn check_class_sizes(max_n: u32) -> Result<CheckResult, CliError> {
    for n in 1..=max_n {
        let tally = class_sizes(n)?;
        let k_n = cauchy_k(n);
        for (alpha, &count) in &tally {
            if cauchy_h(alpha) != count.into() {
                return Ok(Err(format!(
                    "S_{n} class {alpha}: formula disagrees with {count}"
                )));
            }
            if k_n.coefficient(&alpha.monomial()) != integer(count as i64) {
                return Ok(Err(format!("k_{n} coefficient at {alpha} is not {count}")));
            }
        }
    }
    Ok(Ok(format!(
        "S_n enumeration = h(a) = coeff of k_n for n <= {max_n}"
    )))
}

fn check_lowering(max_k: u32) -> CheckResult {
    for n in 1..=max_k {
        for k in 1..=n {
            let lhs = cauchy_j(n).partial(k);
            if lhs != cauchy_j(n - k).scale(&lowering_constant(n, k)) {
                return Err(format!("d{k} j_{n} does not lower as expected"));
            }
        }
    }
    Ok(format!(
        "d_k j_n = (-1)^(k+1) (k-1)! C(n,k) j_(n-k) for k <= n <= {max_k}"
    ))
}

fn check_operators(weight: u32) -> CheckResult {
    let id = LinearOperator::identity();
    let zero = LinearOperator::zero();
    let delta = LinearOperator::delta();
    let mut identities: Vec<(LinearOperator, LinearOperator)> = Vec::new();
    for i in 1..=weight {
        for j in 1..=weight {
            let lhs = commutator(&LinearOperator::partial(i), &LinearOperator::times_var(j));
            identities.push((lhs, if i == j { id.clone() } else { zero.clone() }));
        }
        let lhs = commutator(&delta, &LinearOperator::times_var(i));
        identities.push((
            lhs,
            LinearOperator::times_var(i + 1).scaled(integer(i as i64)),
        ));
        let lhs = commutator(&LinearOperator::partial(i), &delta);
        let rhs = if i == 1 {
            zero.clone()
        } else {
            LinearOperator::partial(i - 1).scaled(integer(i as i64 - 1))
        };
        identities.push((lhs, rhs));
    }
    identities.push((
        commutator(
            &LinearOperator::raising_minus(),
            &LinearOperator::raising_plus(),
        ),
        LinearOperator::times_var(2).scaled(integer(-2)),
    ));
    identities.push((
        commutator(
            &LinearOperator::partial(1),
            &LinearOperator::raising_minus(),
        ),
        id,
    ));
    for (lhs, rhs) in &identities {
        if let Some((m, a, b)) = first_disagreement(lhs, rhs, weight) {
            return Err(format!("{lhs} != {rhs} on {m}: {a} vs {b}"));
        }
    }
    Ok(format!(
        "{} bracket identities on all monomials of weight <= {weight}",
        identities.len()
    ))
}

fn check_conversions(max_k: u32, seed: u64) -> CheckResult {
    let mut rng = random::rng(seed);
    for trial in 0..50 {
        let xs = VariableVector::new(random::rational_vector(&mut rng, trial % 7));
        let s: Vec<Rational> = (1..=max_k as usize)
            .map(|k| eval_power_sum(k, &xs))
            .collect();
        for k in 1..=max_k {
            if c_from_power_sums(k, &s) != eval_elementary(k as usize, &xs) {
                return Err(format!("c_{k} conversion failed on trial {trial}"));
            }
            if w_from_power_sums(k, &s) != eval_wronski(k as usize, &xs) {
                return Err(format!("w_{k} conversion failed on trial {trial}"));
            }
        }
    }
    Ok(format!("50 random vectors, k <= {max_k}"))
}

fn check_prodeterminants(max_n: usize, seed: u64) -> Result<CheckResult, CliError> {
    let registry = AlgorithmRegistry::default();
    let mut rng = random::rng(seed.wrapping_add(1));
    let mut skipped = 0;
    for trial in 0..40 {
        let n = 1 + trial % max_n;
        let a = if trial % 2 == 0 {
            random::integer_matrix(&mut rng, n)
        } else {
            random::rational_matrix(&mut rng, n)
        };
        let reference = registry.get("minors")?.prodets(&a)?;
        for algorithm in registry.iter() {
            for k in 1..=n {
                if !algorithm.admits(n, k) {
                    skipped += 1;
                    continue;
                }
                let v = algorithm.prodet(&a, k)?;
                if v != reference[k - 1] {
                    return Ok(Err(format!(
                        "trial {trial}: {} J_{k} = {v}, minors = {}",
                        algorithm.name(),
                        reference[k - 1]
                    )));
                }
            }
        }
        if !prodet_cauchy(&a, n + 1)?.is_zero() {
            return Ok(Err(format!("trial {trial}: cauchy J_(n+1) is non-zero")));
        }
    }
    Ok(Ok(format!(
        "40 matrices, n <= {max_n}, {} algorithms agree ({skipped} over budget)",
        registry.names().len()
    )))
}

fn check_lax(max_n: usize, seed: u64) -> Result<CheckResult, CliError> {
    let mut rng = random::rng(seed.wrapping_add(2));
    for trial in 0..20 {
        let n = 1 + trial % max_n;
        let m = random::rational_matrix(&mut rng, n);
        let b = random::rational_matrix(&mut rng, n);
        for k in 1..=max_n as u32 {
            let v = lax_trace_check(&m, &b, k)?;
            if !v.is_zero() {
                return Ok(Err(format!(
                    "trial {trial}, k = {k}: Tr([M,B] M^(k-1)) = {v}"
                )));
            }
        }
    }
    Ok(Ok(format!("20 random pairs, n <= {max_n}, all zero")))
}
