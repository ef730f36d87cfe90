//! Acceptance criteria, run against the built `hypoh` binary. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use hypoh_core::{Field, FieldElem, Poly};
use serde_json::Value;

const SEED: &str = "20240601";

/// Hits of `census --p 101 --n 3 --f X --f X+1`, frozen after the first
/// verified run.
const C2_HITS: u64 = 113_322;
/// Hits of `census --p 2 --k 6 --n 3` for `f = X` and `f = X^2 + X + g`.
const C3_HITS: [u64; 2] = [87_360, 86_016];

struct Run {
    json: Value,
    bytes: Vec<u8>,
    secs: f64,
}

fn hypoh(args: &[String], threads: usize) -> Result<Run, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hypoh"))
        .args(args)
        .args(["--deterministic", "--seed", SEED, "--threads"])
        .arg(threads.to_string())
        .env_remove("HYPOH_SEED")
        .output()
        .map_err(|e| format!("cannot run hypoh: {e}"))?;
    let secs = start.elapsed().as_secs_f64();
    if !out.status.success() {
        return Err(format!(
            "hypoh {} failed: {}",
            args.join(" "),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let json = serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON: {e}"))?;
    Ok(Run {
        json,
        bytes: out.stdout,
        secs,
    })
}

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn num(v: &Value) -> u64 {
    v.as_str()
        .and_then(|s| s.parse().ok())
        .or_else(|| v.as_u64())
        .unwrap_or_else(|| panic!("not an integer: {v}"))
}

fn float(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

type Criterion = fn(&mut Log) -> Result<String, String>;

/// Every command a criterion ran, for the determinism replay.
#[derive(Default)]
struct Log {
    runs: Vec<(Vec<String>, usize, Vec<u8>)>,
}

impl Log {
    fn run(&mut self, a: Vec<String>, threads: usize) -> Result<Run, String> {
        let r = hypoh(&a, threads)?;
        self.runs.push((a, threads, r.bytes.clone()));
        Ok(r)
    }
}

/// `|hits - q^n / n^r| / q^(n - 1/2)`, computed from scratch.
fn normalized(hits: u64, q: u64, n: u32, r: u32) -> f64 {
    let expect = (q as f64).powi(n as i32) / (n as f64).powi(r as i32);
    (hits as f64 - expect).abs() / (q as f64).powf(n as f64 - 0.5)
}

fn c1(log: &mut Log) -> Result<String, String> {
    let r = log.run(args(&["census", "--p", "101", "--n", "2", "--f", "X"]), 1)?;
    let res = &r.json["result"];
    let q = 101u64;
    // monic irreducible quadratics: (q^2 - q) / 2
    let oracle = (q * q - q) / 2;
    let hits = num(&res["hits"]);
    check(hits == oracle, format!("hits {hits} != {oracle}"))?;
    check(res["predicted_density"] == "1/2", "prediction is not 1/2")?;
    let nd = normalized(hits, q, 2, 1);
    check(
        (nd - 0.0497).abs() < 5e-4,
        format!("normalized deviation {nd}"),
    )?;
    check(
        (float(&res["normalized_deviation"]).abs() - nd).abs() < 1e-9,
        "reported deviation differs",
    )?;
    check(nd <= 5.0, "deviation above 5")?;
    check(r.secs < 5.0, format!("took {:.2} s", r.secs))?;
    Ok(format!(
        "hits = {hits}, normalized deviation {nd:.4}, {:.2} s",
        r.secs
    ))
}

fn c2(log: &mut Log) -> Result<String, String> {
    let a = args(&["census", "--p", "101", "--n", "3", "--f", "X", "--f", "X+1"]);
    let r = log.run(a, 4)?;
    let res = &r.json["result"];
    let hits = num(&res["hits"]);
    check(res["predicted_density"] == "1/9", "prediction is not 1/9")?;
    let nd = normalized(hits, 101, 3, 2);
    check(nd <= 5.0, format!("normalized deviation {nd}"))?;
    check(hits == C2_HITS, format!("hits {hits} != frozen {C2_HITS}"))?;
    check(r.secs < 60.0, format!("took {:.2} s", r.secs))?;
    Ok(format!(
        "hits = {hits}, normalized deviation {nd:.4}, {:.2} s",
        r.secs
    ))
}

fn c3(log: &mut Log) -> Result<String, String> {
    let mut secs = 0.0;
    let mut parts = Vec::new();
    for (f, frozen) in ["X", "X^2 + X + g"].into_iter().zip(C3_HITS) {
        let r = log.run(
            args(&["census", "--p", "2", "--k", "6", "--n", "3", "--f", f]),
            1,
        )?;
        secs += r.secs;
        let res = &r.json["result"];
        let hits = num(&res["hits"]);
        check(num(&res["total"]) == 262_144, "total is not 64^3")?;
        check(
            res["predicted_density"] == "1/3",
            format!("f = {f}: prediction is not 1/3"),
        )?;
        let nd = normalized(hits, 64, 3, 1);
        check(nd <= 5.0, format!("f = {f}: normalized deviation {nd}"))?;
        check(
            hits == frozen,
            format!("f = {f}: hits {hits} != frozen {frozen}"),
        )?;
        parts.push(format!("{f}: {hits} ({nd:.4})"));
    }
    check(secs < 30.0, format!("took {secs:.2} s"))?;
    Ok(format!("{}, {secs:.2} s", parts.join("; ")))
}

fn partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    (1..=m.min(max))
        .rev()
        .flat_map(|first| {
            partitions(m - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn c4(log: &mut Log) -> Result<String, String> {
    let a = args(&[
        "wreath", "--sweep", "--max-n", "4", "--max-nu", "4", "--limit", "1000000",
    ]);
    let r = log.run(a, 1)?;
    let rows = r.json["result"]["rows"].as_array().ok_or("no rows")?;
    let mut expected = BTreeMap::new();
    for n in 1..=4u64 {
        let nf: u64 = (1..=n).product();
        for nu in 1..=4u32 {
            if nf.pow(nu) > 1_000_000 {
                continue;
            }
            for sizes in partitions(nu as usize, nu as usize) {
                let formula = nf.pow(nu) / n.pow(sizes.len() as u32);
                expected.insert((n, sizes), formula);
            }
        }
    }
    check(
        rows.len() == expected.len(),
        format!("{} setups, expected {}", rows.len(), expected.len()),
    )?;
    for row in rows {
        let n = row["n"].as_u64().unwrap();
        let sizes: Vec<usize> = row["orbit_sizes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        let want = *expected
            .get(&(n, sizes.clone()))
            .ok_or(format!("unexpected setup n={n} {sizes:?}"))?;
        let count = num(&row["transitive_count"]);
        check(
            count == want,
            format!("n={n} {sizes:?}: |T| = {count}, formula {want}"),
        )?;
        check(num(&row["formula"]) == want, "reported formula differs")?;
        check(
            row["conjugation_orbits"] == 1,
            format!("n={n} {sizes:?}: T splits"),
        )?;
    }
    check(r.secs < 60.0, format!("took {:.2} s", r.secs))?;
    Ok(format!(
        "{} setups, all equal, one orbit each, {:.2} s",
        rows.len(),
        r.secs
    ))
}

fn c5(log: &mut Log) -> Result<String, String> {
    let a = args(&["swan", "--deg-bound", "10"]);
    let r = log.run(a.clone(), 1)?;
    let res = &r.json["result"];
    check(
        num(&res["candidates"]) == 2046,
        "candidate count is not 2046",
    )?;
    check(res["max_degree"].as_u64().unwrap() <= 83, "degree above 83")?;
    check(
        res["counterexamples"]
            .as_array()
            .is_some_and(|c| c.is_empty()),
        "found counterexamples",
    )?;
    let mut text_args = a;
    text_args.extend(args(&["--format", "text"]));
    let out = Command::new(env!("CARGO_BIN_EXE_hypoh"))
        .args(&text_args)
        .output()
        .map_err(|e| e.to_string())?;
    check(
        String::from_utf8_lossy(&out.stdout).contains("0 counterexamples"),
        "text output lacks '0 counterexamples'",
    )?;
    check(r.secs < 10.0, format!("took {:.2} s", r.secs))?;
    Ok(format!("0 counterexamples among 2046, {:.2} s", r.secs))
}

fn c6(log: &mut Log) -> Result<String, String> {
    let r = log.run(args(&["disc", "--p", "3", "--sym", "X^3 + 2*X^2 + T"]), 1)?;
    let d = r.json["result"]["sym"]["discriminant"]
        .as_str()
        .unwrap_or("")
        .to_string();
    check(
        d == "T" || d == "2*T",
        format!("Disc = {d}, not a unit times T"),
    )?;
    let r = log.run(args(&["disc", "--p", "5", "--sym", "X^4 - T"]), 1)?;
    let class = &r.json["result"]["sym"]["square_class"];
    check(
        class["rep"] == "T",
        format!("squarefree part {}", class["rep"]),
    )?;
    check(
        class["nonsquare_unit"] == false,
        "unit part is not a square",
    )?;
    Ok(format!("Disc = {d}; class of X^4 - T is [T]"))
}

fn c7(log: &mut Log) -> Result<String, String> {
    let indep = |log: &mut Log, classes: &[&str], p: &str| -> Result<bool, String> {
        let mut a = args(&["indep", "--p", p]);
        for c in classes {
            a.push("--class".into());
            a.push(c.to_string());
        }
        let r = log.run(a, 1)?;
        r.json["result"]["independent"]
            .as_bool()
            .ok_or("no verdict".into())
    };
    check(
        indep(log, &["T", "T - 1", "T - 2"], "7")?,
        "{[T], [T-1], [T-2]} dependent",
    )?;
    for rep in [
        &["T", "T"][..],
        &["T", "T - 1", "T"],
        &["T - 1", "4*T - 4"],
        &["T", "T^3"],
        &["T - 2", "T + 1", "T - 2", "T"],
    ] {
        check(
            !indep(log, rep, "7")?,
            format!("{rep:?} reported independent"),
        )?;
    }
    Ok("independent = true; 5 repeated families false".into())
}

fn c8(log: &mut Log) -> Result<String, String> {
    let mut secs = 0.0;
    let mut total = 0;
    for (k, d) in [("1", "8"), ("2", "6")] {
        let a = args(&[
            "disc",
            "--p",
            "2",
            "--k",
            k,
            "--parity",
            "--deg-bound",
            d,
            "--samples",
            "300",
        ]);
        let r = log.run(a, 1)?;
        secs += r.secs;
        let rep = &r.json["result"]["parity"];
        check(rep["samples"] == 300, "wrong sample count")?;
        let v = rep["violations"].as_array().map_or(usize::MAX, Vec::len);
        check(
            v == 0,
            format!("F_{}: {v} violations", 2u32.pow(k.parse().unwrap())),
        )?;
        total += 300;
    }
    check(secs < 20.0, format!("took {secs:.2} s"))?;
    Ok(format!("{total} samples, 0 violations, {secs:.2} s"))
}

fn c9(log: &mut Log) -> Result<String, String> {
    let f = Field::new(2, 6).unwrap();
    let w = f.pow(f.primitive_element(), 21);
    check(
        f.pow(w, 4) == w && w != f.one(),
        "g^21 is not a generator of F_4",
    )?;
    let mut secs = 0.0;
    let r = log.run(
        args(&[
            "corr",
            "--p",
            "2",
            "--k",
            "6",
            "--omega",
            "0,1,g^21,g^21 + 1",
        ]),
        1,
    )?;
    secs += r.secs;
    let dep = &r.json["result"];
    check(
        num(&dep["total"]) == 4096,
        "not exhaustive over 4096 quadratics",
    )?;
    let rel = float(&dep["relative_deviation"]);
    let all = num(&dep["all_irreducible"]);
    check(
        (all as f64 - 256.0).abs() / 256.0 > 0.25,
        format!("dependent case deviates {rel}"),
    )?;
    let r = log.run(args(&["corr", "--p", "2", "--k", "6", "--omega", "0,1"]), 1)?;
    secs += r.secs;
    let ctl = &r.json["result"];
    let all_ctl = num(&ctl["all_irreducible"]);
    check(
        (all_ctl as f64 - 1024.0).abs() / 1024.0 <= 0.20,
        format!("control deviates: {all_ctl}"),
    )?;
    check(secs < 5.0, format!("took {secs:.2} s"))?;
    Ok(format!(
        "{{0,1,ω,ω+1}}: {all} vs 256 ({:+.1}%); {{0,1}}: {all_ctl} vs 1024, {secs:.2} s",
        rel * 100.0
    ))
}

/// Monic irreducible polynomials of degree 1 and 2 over `F_q`.
fn small_irreducibles(f: &Arc<Field>) -> Vec<Poly> {
    let elems: Vec<FieldElem> = f.elements().collect();
    let mut out: Vec<Poly> = elems
        .iter()
        .map(|&a| Poly::new(f, vec![a, f.one()]).unwrap())
        .collect();
    for &a in &elems {
        for &b in &elems {
            let h = Poly::new(f, vec![a, b, f.one()]).unwrap();
            if h.is_irreducible().unwrap() {
                out.push(h);
            }
        }
    }
    out
}

struct C10 {
    shadow: Result<String, String>,
    frequencies: Result<String, String>,
}

fn c10(log: &mut Log) -> C10 {
    let start = Instant::now();
    let mut cases = 0;
    let mut shadow_bad = Vec::new();
    let mut worst: (f64, String) = (0.0, String::new());
    let mut over = 0;
    let mut failure = None;
    for (p, k) in [(3u64, 1u32), (2, 2), (5, 1)] {
        let f = Field::new(p, k).unwrap();
        for n in [2, 3] {
            for h in small_irreducibles(&f) {
                let a = args(&[
                    "census",
                    "--p",
                    &p.to_string(),
                    "--k",
                    &k.to_string(),
                    "--n",
                    &n.to_string(),
                    "--f",
                    &h.to_string(),
                ]);
                let r = match log.run(a, 1) {
                    Ok(r) => r,
                    Err(e) => {
                        failure = Some(e);
                        continue;
                    }
                };
                cases += 1;
                let res = &r.json["result"];
                let label = format!("q={} n={n} f={h}", f.order());
                if !res["shadow_violations"]
                    .as_array()
                    .is_some_and(|v| v.is_empty())
                {
                    shadow_bad.push(label.clone());
                }
                let gap = float(&res["max_frequency_gap"]);
                if gap > 0.05 {
                    over += 1;
                }
                if gap > worst.0 {
                    worst = (gap, label);
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if let Some(e) = failure {
        return C10 {
            shadow: Err(e.clone()),
            frequencies: Err(e),
        };
    }
    let timing = if secs < 60.0 {
        Ok(())
    } else {
        Err(format!("took {secs:.2} s"))
    };
    let shadow = if shadow_bad.is_empty() {
        timing.clone().map(|_| {
            format!("{cases} censuses, every observed tuple has positive predicted density, {secs:.2} s")
        })
    } else {
        Err(format!(
            "zero-density tuples observed in {}",
            shadow_bad.join(", ")
        ))
    };
    let frequencies = if over == 0 {
        timing.map(|_| format!("all {cases} within 5 percentage points"))
    } else {
        Err(format!(
            "{over} of {cases} censuses exceed 5 percentage points; worst {:.1} pp at {}",
            worst.0 * 100.0,
            worst.1
        ))
    };
    C10 {
        shadow,
        frequencies,
    }
}

fn c11(log: &Log) -> Result<String, String> {
    let mut compared = 0;
    for (a, threads, bytes) in &log.runs {
        for t in [1, 4] {
            let again = hypoh(a, t)?;
            check(
                &again.bytes == bytes,
                format!(
                    "hypoh {} differs between --threads {threads} and {t}",
                    a.join(" ")
                ),
            )?;
            compared += 1;
        }
    }
    Ok(format!(
        "{} commands, {compared} replays byte-identical",
        log.runs.len()
    ))
}

fn main() -> ExitCode {
    let mut log = Log::default();
    let mut results: Vec<(&str, Result<String, String>)> = Vec::new();
    let criteria: [(&str, Criterion); 9] = [
        ("1  census r=1 over F_101", c1),
        ("2  census r=2 over F_101", c2),
        ("3  census over F_64, n odd", c3),
        ("4  column-transitive counts", c4),
        ("5  g^8 + t^3 over F_2", c5),
        ("6  symbolic discriminants", c6),
        ("7  square-class independence", c7),
        ("8  characteristic-2 parity law", c8),
        ("9  even-sum dependence over F_64", c9),
    ];
    for (name, f) in criteria {
        results.push((name, f(&mut log)));
    }
    let ten = c10(&mut log);
    results.push(("10a observed tuples have positive density", ten.shadow));
    results.push(("10b frequencies within 5 pp of prediction", ten.frequencies));
    results.push(("11 determinism across --threads 1 and 4", c11(&log)));

    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
