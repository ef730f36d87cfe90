use std::fmt::Write as _;
use std::sync::Arc;

use hypoh_core::bivar::{
    check_lemma_alt_sym, square_classes_independent, squarefree_part, sym_discriminant, RPoly,
};
use hypoh_core::census::{
    correlation_mode, run_census, swan_mode, type_census, CensusReport, CensusSpec, Mode, SAMPLER,
};
use hypoh_core::disc::{berlekamp_element, disc_class_odd, even_sum_criterion, parity_law_check};
use hypoh_core::field::prime_factors;
use hypoh_core::wreath::{
    conjugation_orbit_on_t, count_transitive, density_table, predict_density, OrbitSetup,
};
use hypoh_core::{Error, FactType, Field, FieldElem, Poly, Result};
use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::output::{Output, Table};
use crate::{CensusArgs, Cli, Command};

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Census(args) => census(cli, args, false),
        Command::TypeCensus(args) => census(cli, args, true),
        Command::Predict {
            n,
            orbits,
            fs,
            targets,
        } => predict(cli, *n, orbits, fs, targets),
        Command::Wreath {
            n,
            orbits,
            sweep,
            max_n,
            max_nu,
            limit,
        } => {
            if *sweep {
                wreath_sweep(*max_n, *max_nu, *limit)
            } else {
                let n = n.ok_or_else(|| usage("wreath needs --n and --orbits, or --sweep"))?;
                wreath_single(n, orbits)
            }
        }
        Command::Disc {
            h,
            sym,
            parity,
            deg_bound,
            samples,
            even_sum,
        } => disc(
            cli,
            h.as_deref(),
            sym.as_deref(),
            *parity,
            *deg_bound,
            *samples,
            even_sum,
        ),
        Command::Indep {
            classes,
            lemma,
            n,
            r,
            trials,
        } => indep(cli, classes, *lemma, *n, *r, *trials),
        Command::Swan { deg_bound } => swan(cli, *deg_bound),
        Command::Corr { n, omega } => corr(cli, *n, omega),
        Command::FieldInfo => field_info(cli),
    }
}

fn usage(msg: &str) -> Error {
    Error::InvalidArgument(msg.to_string())
}

fn field(cli: &Cli) -> Result<Arc<Field>> {
    let p = cli.common.p.ok_or_else(|| usage("--p is required"))?;
    Field::new(p, cli.common.k)
}

fn field_params(cli: &Cli) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("p".into(), json!(cli.common.p.map(|p| p.to_string())));
    m.insert("k".into(), json!(cli.common.k));
    m
}

fn ratio<T: std::fmt::Display>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn types_json(types: &[FactType]) -> Value {
    json!(types.iter().map(|t| t.to_string()).collect::<Vec<_>>())
}

fn types_text(types: &[FactType]) -> String {
    types
        .iter()
        .map(|t| format!("{{{t}}}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A field element written as a polynomial of degree at most 0.
fn parse_elem(field: &Arc<Field>, src: &str) -> Result<FieldElem> {
    let p = Poly::parse(field, src)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(usage(&format!("'{src}' is not a field element")));
    }
    Ok(p.coeff(0))
}

fn elem_text(field: &Arc<Field>, a: FieldElem) -> String {
    Poly::constant(field, a).to_string()
}

fn parse_targets(src: &[String]) -> Result<Vec<FactType>> {
    src.iter().map(|s| s.parse::<FactType>()).collect()
}

fn opt_f64(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |v| json!(v))
}

fn census(cli: &Cli, args: &CensusArgs, typed: bool) -> Result<Output> {
    let field = field(cli)?;
    let fs = args
        .fs
        .iter()
        .map(|s| Poly::parse(&field, s))
        .collect::<Result<Vec<_>>>()?;
    let targets = parse_targets(&args.targets)?;
    if typed && targets.is_empty() {
        return Err(usage("type-census needs one --target per --f"));
    }
    let mut spec = CensusSpec::new(&field, args.n, fs);
    if let Some(samples) = args.sample {
        spec = spec.with_mode(Mode::Sample {
            samples,
            seed: cli.common.seed,
        });
    }
    if !targets.is_empty() {
        spec = spec.with_targets(targets);
    }
    if args.raw {
        spec = spec.raw();
    }
    let report = if typed {
        type_census(&spec)?
    } else {
        run_census(&spec)?
    };

    let mut params = field_params(cli);
    params.insert("n".into(), json!(args.n));
    params.insert("f".into(), json!(args.fs));
    params.insert("targets".into(), json!(args.targets));
    params.insert("sample".into(), json!(args.sample.map(|s| s.to_string())));
    params.insert("seed".into(), json!(cli.common.seed.to_string()));
    params.insert("raw".into(), json!(args.raw));

    Ok(Output {
        params,
        result: census_json(&report),
        table: census_table(&report),
        text: census_text(&report),
    })
}

fn census_json(r: &CensusReport) -> Value {
    let mode = match r.mode {
        Mode::Exhaustive => json!({ "kind": "exhaustive" }),
        Mode::Sample { samples, seed } => json!({
            "kind": "sample",
            "samples": samples.to_string(),
            "seed": seed.to_string(),
            "sampler": SAMPLER,
        }),
    };
    let histogram: Vec<Value> = r
        .histogram
        .iter()
        .map(|row| {
            json!({
                "types": types_json(&row.types),
                "count": row.count.to_string(),
                "frequency": r.frequency(&row.types),
                "predicted": row.predicted.as_ref().map(ratio),
            })
        })
        .collect();
    json!({
        "q": r.q.to_string(),
        "n": r.n,
        "f": r.fs.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "mode": mode,
        "total": r.total.to_string(),
        "separable_total": r.separable_total.to_string(),
        "inseparable": r.inseparable.to_string(),
        "targets": types_json(&r.targets),
        "hits": r.hits.to_string(),
        "predicted_density": r.predicted_density.as_ref().map(ratio),
        "deviation": opt_f64(r.deviation),
        "normalized_deviation": opt_f64(r.normalized_deviation),
        "standard_error": opt_f64(r.standard_error),
        "max_frequency_gap": opt_f64(r.max_frequency_gap),
        "shadow_violations": r.shadow_violations.iter().map(|t| types_json(t)).collect::<Vec<_>>(),
        "degree_law_violations": r.degree_law_violations.to_string(),
        "histogram": histogram,
    })
}

fn census_table(r: &CensusReport) -> Table {
    Table {
        header: vec!["types", "count", "frequency", "predicted"],
        rows: r
            .histogram
            .iter()
            .map(|row| {
                vec![
                    row.types
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    row.count.to_string(),
                    r.frequency(&row.types).to_string(),
                    row.predicted.as_ref().map(ratio).unwrap_or_default(),
                ]
            })
            .collect(),
    }
}

fn census_text(r: &CensusReport) -> String {
    let mut s = String::new();
    let fs: Vec<String> = r.fs.iter().map(|f| f.to_string()).collect();
    let _ = writeln!(s, "q = {}, n = {}, f = {}", r.q, r.n, fs.join(", "));
    let _ = writeln!(
        s,
        "substitutions: {} ({} separable, {} inseparable)",
        r.total, r.separable_total, r.inseparable
    );
    let _ = writeln!(s, "targets: {}", types_text(&r.targets));
    let _ = writeln!(s, "hits: {}", r.hits);
    if let Some(d) = &r.predicted_density {
        let _ = writeln!(s, "predicted density: {}", ratio(d));
    }
    if let Some(d) = r.normalized_deviation {
        let _ = writeln!(s, "normalized deviation: {d:.6}");
    }
    if let Some(g) = r.max_frequency_gap {
        let _ = writeln!(s, "max frequency gap: {g:.6}");
    }
    let _ = writeln!(s, "shadow violations: {}", r.shadow_violations.len());
    s
}

fn predict(
    cli: &Cli,
    n: usize,
    orbits: &[usize],
    fs: &[String],
    targets: &[String],
) -> Result<Output> {
    let sizes = if !fs.is_empty() {
        if !orbits.is_empty() {
            return Err(usage("give either --orbits or --f, not both"));
        }
        let field = field(cli)?;
        let mut sizes = Vec::new();
        for s in fs {
            let f = Poly::parse(&field, s)?;
            if !f.is_irreducible()? {
                return Err(Error::Reducible(f.to_string()));
            }
            sizes.push(f.degree().unwrap_or(0));
        }
        sizes
    } else if !orbits.is_empty() {
        orbits.to_vec()
    } else {
        return Err(usage("predict needs --orbits or --f"));
    };
    let setup = OrbitSetup::from_orbit_sizes(n, &sizes)?;
    let targets = if targets.is_empty() {
        sizes
            .iter()
            .map(|&d| FactType::irreducible(n * d))
            .collect()
    } else {
        parse_targets(targets)?
    };
    let density = predict_density(&setup, &targets)?;

    let mut params = field_params(cli);
    params.insert("n".into(), json!(n));
    params.insert("orbits".into(), json!(orbits));
    params.insert("f".into(), json!(fs));
    params.insert(
        "targets".into(),
        json!(targets.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    );

    let table = density_table(&setup)?;
    let total: u64 = table.values().sum();
    let rows: Vec<Value> = table
        .iter()
        .map(|(types, &count)| {
            json!({
                "types": types_json(types),
                "count": count.to_string(),
                "density": ratio(&Ratio::new(count, total)),
            })
        })
        .collect();
    let result = json!({
        "n": n,
        "orbit_sizes": sizes,
        "group_order": total.to_string(),
        "targets": types_json(&targets),
        "density": ratio(&density),
        "table": rows,
    });
    let csv = Table {
        header: vec!["types", "count", "density"],
        rows: table
            .iter()
            .map(|(types, &count)| {
                vec![
                    types
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    count.to_string(),
                    ratio(&Ratio::new(count, total)),
                ]
            })
            .collect(),
    };
    let text = format!(
        "n = {n}, orbit sizes = {sizes:?}\ndensity of {}: {}\n",
        types_text(&targets),
        ratio(&density)
    );
    Ok(Output {
        params,
        result,
        table: csv,
        text,
    })
}

struct WreathRow {
    n: usize,
    sizes: Vec<usize>,
    order: u128,
    count: u64,
    formula: u128,
    orbits_on_t: usize,
}

impl WreathRow {
    fn equal(&self) -> bool {
        self.count as u128 == self.formula
    }

    fn json(&self) -> Value {
        json!({
            "n": self.n,
            "orbit_sizes": self.sizes,
            "group_order": self.order.to_string(),
            "transitive_count": self.count.to_string(),
            "formula": self.formula.to_string(),
            "equal": self.equal(),
            "conjugation_orbits": self.orbits_on_t,
        })
    }

    fn csv(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            self.order.to_string(),
            self.count.to_string(),
            self.formula.to_string(),
            self.equal().to_string(),
            self.orbits_on_t.to_string(),
        ]
    }

    fn text(&self) -> String {
        format!(
            "n = {}, orbits = {:?}: |T| = {}, formula = {}, {}, conjugation orbits on T = {}\n",
            self.n,
            self.sizes,
            self.count,
            self.formula,
            if self.equal() { "equal" } else { "DIFFERENT" },
            self.orbits_on_t
        )
    }
}

const WREATH_HEADER: [&str; 7] = [
    "n",
    "orbit_sizes",
    "group_order",
    "transitive_count",
    "formula",
    "equal",
    "conjugation_orbits",
];

fn wreath_row(n: usize, sizes: &[usize]) -> Result<WreathRow> {
    let setup = OrbitSetup::from_orbit_sizes(n, sizes)?;
    let order = setup
        .group_order()
        .ok_or_else(|| usage("group order overflows"))?;
    Ok(WreathRow {
        n,
        sizes: sizes.to_vec(),
        order,
        count: count_transitive(&setup)?,
        formula: setup.transitive_formula().unwrap_or(0),
        orbits_on_t: conjugation_orbit_on_t(&setup)?,
    })
}

fn wreath_single(n: usize, orbits: &[usize]) -> Result<Output> {
    if orbits.is_empty() {
        return Err(usage("wreath needs --orbits"));
    }
    let row = wreath_row(n, orbits)?;
    let mut params = Map::new();
    params.insert("n".into(), json!(n));
    params.insert("orbits".into(), json!(orbits));
    Ok(Output {
        params,
        result: row.json(),
        table: Table {
            header: WREATH_HEADER.to_vec(),
            rows: vec![row.csv()],
        },
        text: row.text(),
    })
}

/// Partitions of `m` into nonincreasing parts.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=m.min(max)).rev() {
            cur.push(part);
            go(m - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

fn wreath_sweep(max_n: usize, max_nu: usize, limit: u64) -> Result<Output> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let nf: u128 = (1..=n as u128).product();
        for nu in 1..=max_nu {
            match nf.checked_pow(nu as u32) {
                Some(order) if order <= limit as u128 => {}
                _ => continue,
            }
            for sizes in partitions(nu) {
                rows.push(wreath_row(n, &sizes)?);
            }
        }
    }
    let all_equal = rows.iter().all(WreathRow::equal);
    let all_single = rows.iter().all(|r| r.orbits_on_t == 1);
    let mut params = Map::new();
    params.insert("sweep".into(), json!(true));
    params.insert("max_n".into(), json!(max_n));
    params.insert("max_nu".into(), json!(max_nu));
    params.insert("limit".into(), json!(limit.to_string()));
    let mut text: String = rows.iter().map(WreathRow::text).collect();
    let _ = writeln!(
        text,
        "{} setups, all equal: {all_equal}, all single orbit: {all_single}",
        rows.len()
    );
    Ok(Output {
        params,
        result: json!({
            "setups": rows.len(),
            "all_equal": all_equal,
            "all_single_orbit": all_single,
            "rows": rows.iter().map(WreathRow::json).collect::<Vec<_>>(),
        }),
        table: Table {
            header: WREATH_HEADER.to_vec(),
            rows: rows.iter().map(WreathRow::csv).collect(),
        },
        text,
    })
}

#[allow(clippy::too_many_arguments)]
fn disc(
    cli: &Cli,
    h: Option<&str>,
    sym: Option<&str>,
    parity: bool,
    deg_bound: usize,
    samples: usize,
    even_sum: &[String],
) -> Result<Output> {
    if h.is_none() && sym.is_none() && !parity && even_sum.is_empty() {
        return Err(usage("disc needs --h, --sym, --parity or --even-sum"));
    }
    let field = field(cli)?;
    let mut params = field_params(cli);
    let mut result = Map::new();
    let mut rows = Vec::new();
    let mut text = String::new();

    if let Some(src) = h {
        params.insert("h".into(), json!(src));
        let poly = Poly::parse(&field, src)?;
        let d = poly.discriminant()?;
        let mut out = Map::new();
        out.insert("h".into(), json!(poly.to_string()));
        out.insert("discriminant".into(), json!(elem_text(&field, d)));
        out.insert("fact_type".into(), json!(poly.fact_type()?.to_string()));
        let class = if field.characteristic() == 2 {
            let b = berlekamp_element(&poly)?;
            out.insert(
                "berlekamp_element".into(),
                json!(elem_text(&field, b.class.a)),
            );
            out.insert("class_trivial".into(), json!(b.class.value == 0));
            b.class.value == 0
        } else {
            let square = disc_class_odd(&poly)?;
            out.insert("class_trivial".into(), json!(square));
            square
        };
        let _ = writeln!(
            text,
            "h = {poly}: Disc = {}, class {}",
            elem_text(&field, d),
            if class { "trivial" } else { "nontrivial" }
        );
        rows.push(vec!["h".into(), poly.to_string(), class.to_string()]);
        result.insert("h".into(), Value::Object(out));
    }

    if let Some(src) = sym {
        params.insert("sym".into(), json!(src));
        let poly = RPoly::parse(&field, src)?;
        let d = sym_discriminant(&poly)?;
        let dtext = d.to_string_var("T");
        let mut out = Map::new();
        out.insert("h".into(), json!(poly.to_string()));
        out.insert("discriminant".into(), json!(dtext));
        let _ = write!(text, "Disc_X({poly}) = {dtext}");
        if field.characteristic() != 2 && !d.is_zero() {
            let class = squarefree_part(&d)?;
            out.insert("square_class".into(), json!(class));
            let _ = write!(text, ", class {class}");
        }
        text.push('\n');
        rows.push(vec!["sym".into(), poly.to_string(), dtext]);
        result.insert("sym".into(), Value::Object(out));
    }

    if parity {
        params.insert("parity".into(), json!(true));
        params.insert("deg_bound".into(), json!(deg_bound));
        params.insert("samples".into(), json!(samples));
        params.insert("seed".into(), json!(cli.common.seed.to_string()));
        let rep = parity_law_check(&field, deg_bound, samples, cli.common.seed)?;
        let _ = writeln!(
            text,
            "parity law: {} samples, {} violations",
            rep.samples,
            rep.violations.len()
        );
        rows.push(vec![
            "parity".into(),
            rep.samples.to_string(),
            rep.violations.len().to_string(),
        ]);
        result.insert(
            "parity".into(),
            json!({
                "degree_bound": rep.degree_bound,
                "samples": rep.samples,
                "seed": rep.seed.to_string(),
                "trivial_class": rep.trivial_class,
                "violations": rep.violations,
            }),
        );
    }

    if !even_sum.is_empty() {
        params.insert("even_sum".into(), json!(even_sum));
        let omega = even_sum
            .iter()
            .map(|s| parse_elem(&field, s))
            .collect::<Result<Vec<_>>>()?;
        let ok = even_sum_criterion(&field, &omega)?;
        let _ = writeln!(text, "even-sum criterion: {ok}");
        rows.push(vec!["even_sum".into(), even_sum.join(";"), ok.to_string()]);
        result.insert("even_sum".into(), json!(ok));
    }

    Ok(Output {
        params,
        result: Value::Object(result),
        table: Table {
            header: vec!["check", "input", "value"],
            rows,
        },
        text,
    })
}

fn indep(
    cli: &Cli,
    classes: &[String],
    lemma: bool,
    n: usize,
    r: usize,
    trials: usize,
) -> Result<Output> {
    if lemma {
        let rep = check_lemma_alt_sym(n, r, trials, cli.common.seed)?;
        let mut params = Map::new();
        params.insert("lemma".into(), json!(true));
        params.insert("n".into(), json!(n));
        params.insert("r".into(), json!(r));
        params.insert("trials".into(), json!(trials));
        params.insert("seed".into(), json!(cli.common.seed.to_string()));
        let text = format!(
            "n = {n}, r = {r}: {} trials, hypothesis held {} times, {} counterexamples\n",
            rep.trials, rep.hypothesis_held, rep.counterexamples
        );
        return Ok(Output {
            params,
            result: json!({
                "n": rep.n,
                "r": rep.r,
                "trials": rep.trials,
                "seed": rep.seed.to_string(),
                "hypothesis_held": rep.hypothesis_held,
                "counterexamples": rep.counterexamples,
                "consistent": rep.consistent,
            }),
            table: Table {
                header: vec!["n", "r", "trials", "hypothesis_held", "counterexamples"],
                rows: vec![vec![
                    n.to_string(),
                    r.to_string(),
                    trials.to_string(),
                    rep.hypothesis_held.to_string(),
                    rep.counterexamples.to_string(),
                ]],
            },
            text,
        });
    }
    if classes.is_empty() {
        return Err(usage("indep needs --class or --lemma"));
    }
    let field = field(cli)?;
    let sq = classes
        .iter()
        .map(|s| squarefree_part(&Poly::parse(&field, s)?))
        .collect::<Result<Vec<_>>>()?;
    let independent = square_classes_independent(&sq)?;
    let mut params = field_params(cli);
    params.insert("classes".into(), json!(classes));
    let mut text: String = sq.iter().map(|c| format!("{c}\n")).collect();
    let _ = writeln!(text, "independent: {independent}");
    Ok(Output {
        params,
        result: json!({ "classes": sq, "independent": independent }),
        table: Table {
            header: vec!["class", "nonsquare_unit"],
            rows: sq
                .iter()
                .map(|c| vec![c.rep().to_string_var("T"), c.nonsquare_unit().to_string()])
                .collect(),
        },
        text,
    })
}

fn swan(cli: &Cli, deg_bound: usize) -> Result<Output> {
    let field = Field::new(cli.common.p.unwrap_or(2), cli.common.k)?;
    let rep = swan_mode(&field, deg_bound)?;
    let mut params = Map::new();
    params.insert("p".into(), json!(field.characteristic().to_string()));
    params.insert("k".into(), json!(field.degree()));
    params.insert("deg_bound".into(), json!(deg_bound));
    let degrees: Map<String, Value> = rep
        .smallest_factor_degrees
        .iter()
        .map(|(d, c)| (d.to_string(), json!(c.to_string())))
        .collect();
    let counterexamples: Vec<String> = rep
        .counterexamples
        .iter()
        .map(|g| g.to_string_var("t"))
        .collect();
    let mut text = format!(
        "{} candidates over F_{}, deg g <= {}, deg(g^8 + t^3) <= {}\n{} counterexamples\n",
        rep.candidates,
        rep.q,
        rep.degree_bound,
        rep.max_degree,
        counterexamples.len()
    );
    for g in &counterexamples {
        let _ = writeln!(text, "  g = {g}");
    }
    Ok(Output {
        params,
        result: json!({
            "q": rep.q.to_string(),
            "degree_bound": rep.degree_bound,
            "candidates": rep.candidates.to_string(),
            "max_degree": rep.max_degree,
            "smallest_factor_degrees": degrees,
            "counterexamples": counterexamples,
        }),
        table: Table {
            header: vec!["smallest_factor_degree", "count"],
            rows: rep
                .smallest_factor_degrees
                .iter()
                .map(|(d, c)| vec![d.to_string(), c.to_string()])
                .collect(),
        },
        text,
    })
}

fn corr(cli: &Cli, n: usize, omega: &[String]) -> Result<Output> {
    let field = field(cli)?;
    let shifts = omega
        .iter()
        .map(|s| parse_elem(&field, s))
        .collect::<Result<Vec<_>>>()?;
    let rep = correlation_mode(&field, n, &shifts)?;
    let mut params = field_params(cli);
    params.insert("n".into(), json!(n));
    params.insert("omega".into(), json!(omega));
    let joint: Map<String, Value> = rep
        .joint
        .iter()
        .map(|(mask, c)| {
            (
                format!("{mask:0w$b}", w = shifts.len()),
                json!(c.to_string()),
            )
        })
        .collect();
    let text = format!(
        "q = {}, Ω = {{{}}}\nall irreducible: {} (independent prediction {:.2}, relative deviation {:+.4})\neven-sum criterion: {}\n",
        rep.q,
        omega.join(", "),
        rep.all_irreducible,
        rep.independent_prediction,
        rep.relative_deviation,
        rep.even_sum
    );
    Ok(Output {
        params,
        result: json!({
            "q": rep.q.to_string(),
            "omega": rep.omega.iter().map(|&w| elem_text(&field, w)).collect::<Vec<_>>(),
            "total": rep.total.to_string(),
            "all_irreducible": rep.all_irreducible.to_string(),
            "independent_prediction": rep.independent_prediction,
            "relative_deviation": rep.relative_deviation,
            "even_sum": rep.even_sum,
            "marginals": rep.marginals.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "joint": joint,
        }),
        table: Table {
            header: vec!["mask", "count"],
            rows: rep
                .joint
                .iter()
                .map(|(mask, c)| vec![format!("{mask:0w$b}", w = shifts.len()), c.to_string()])
                .collect(),
        },
        text,
    })
}

fn field_info(cli: &Cli) -> Result<Output> {
    let field = field(cli)?;
    let p = field.characteristic();
    let prime = Field::prime(p)?;
    let coeffs = |v: &[u64]| -> Result<String> {
        let c = v.iter().map(|&c| prime.from_int(c)).collect();
        Ok(Poly::new(&prime, c)?.to_string_var("x"))
    };
    let modulus = coeffs(field.modulus())?;
    let g = field.primitive_element();
    let generator = coeffs(&field.coeffs(g))?;
    let q = field.order();
    let factors: Vec<String> = prime_factors(q - 1).iter().map(|f| f.to_string()).collect();
    let text = format!(
        "F_{q} = F_{p}[x]/({modulus})\ngenerator g = {generator}\nq - 1 = {q1} with prime factors {factors:?}\n",
        q1 = q - 1
    );
    Ok(Output {
        params: field_params(cli),
        result: json!({
            "p": p.to_string(),
            "k": field.degree(),
            "q": q.to_string(),
            "modulus": modulus,
            "generator": generator,
            "generator_code": g.code().to_string(),
            "multiplicative_order_factors": factors,
        }),
        table: Table {
            header: vec!["p", "k", "q", "modulus", "generator"],
            rows: vec![vec![
                p.to_string(),
                field.degree().to_string(),
                q.to_string(),
                modulus,
                generator,
            ]],
        },
        text,
    })
}
