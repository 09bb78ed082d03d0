//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use abs_extremal::extremal::{
    complete_split, double_star, double_star_split_value, kite, star, turan, AuditFamily,
};
use abs_extremal::search::{
    check_edge_lemma, check_scalar_lemmas, enumerate_classes, verify_in_catalog, LemmaGrid,
};
use abs_extremal::{
    abs_index, are_isomorphic, graph6, Catalog, Graph, SearchOptions, Strategy, Theorem,
};
use abs_extremal_cli::{audit, verify, Format, OrderRange, SweepConfig};

const INDEX_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s(x: f64) -> f64 {
    x.sqrt()
}

fn unit_values() -> Outcome {
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    // Hand sums over edges, grouped by degree pair.
    let cases = [
        ("K2", k2, 0.0),
        ("P3", p3, 2.0 * s(1.0 / 3.0)),
        ("C5", c5, 5.0 * s(1.0 / 2.0)),
        ("K4", k4, 6.0 * s(2.0 / 3.0)),
        ("star(5)", star(5).unwrap(), 4.0 * s(3.0 / 5.0)),
        (
            "turan(5,3)",
            turan(5, 3).unwrap(),
            4.0 * s(2.0 / 3.0) + 4.0 * s(5.0 / 7.0),
        ),
        // apex-clique 3 x (5,3), apex-pendant 2 x (5,1), clique 3 x (3,3)
        (
            "kite(6,2)",
            kite(6, 2).unwrap(),
            3.0 * s(6.0 / 8.0) + 2.0 * s(4.0 / 6.0) + 3.0 * s(4.0 / 6.0),
        ),
        // clique edge (3,3), four cross edges (2,3)
        (
            "complete_split(4,2)",
            complete_split(4, 2).unwrap(),
            s(4.0 / 6.0) + 4.0 * s(3.0 / 5.0),
        ),
    ];
    let mut worst = 0.0f64;
    for (name, g, expected) in cases {
        let got = abs_index(&g);
        let diff = (got - expected).abs();
        worst = worst.max(diff);
        check(diff <= INDEX_TOL, || format!("{name}: {got} vs {expected}"))?;
    }
    Ok(format!("8 graphs, max |diff| = {worst:.1e}"))
}

fn sweep_against(
    theorem: Theorem,
    orders: std::ops::RangeInclusive<usize>,
    params: impl Fn(usize) -> std::ops::RangeInclusive<usize>,
    expected: impl Fn(usize, usize) -> Graph,
) -> Outcome {
    let opts = SearchOptions::with_workers(1);
    let start = Instant::now();
    let mut rows = 0;
    for n in orders {
        let catalog = Catalog::build(n, &opts).map_err(|e| e.to_string())?;
        for k in params(n) {
            let v = verify_in_catalog(&catalog, theorem, k).map_err(|e| e.to_string())?;
            let r = &v.report;
            check(r.unique, || {
                format!("n={n} k={k}: {} maximizers", r.maximizers.len())
            })?;
            let want = expected(n, k);
            let got = r.maximizers[0].form.to_graph();
            check(are_isomorphic(&got, &want), || {
                format!(
                    "n={n} k={k}: maximizer {} is not {}",
                    graph6::encode(&got),
                    graph6::encode(&want)
                )
            })?;
            let ties = r
                .maximizers
                .iter()
                .all(|m| (m.value - r.max_value.unwrap()).abs() <= 1e-9);
            check(ties, || format!("n={n} k={k}: tie set inconsistent"))?;
            rows += 1;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(180), || {
        format!("took {elapsed:.2?}")
    })?;
    Ok(format!("{rows} cases, {elapsed:.2?} single-threaded"))
}

fn chromatic_sweep() -> Outcome {
    sweep_against(
        Theorem::Chromatic,
        5..=7,
        |n| 3..=n - 1,
        |n, k| turan(n, k).unwrap(),
    )
}

fn independence_sweep() -> Outcome {
    sweep_against(
        Theorem::Independence,
        4..=7,
        |n| 1..=n - 1,
        |n, k| complete_split(n, k).unwrap(),
    )
}

fn pendant_sweep() -> Outcome {
    sweep_against(
        Theorem::Pendant,
        5..=7,
        |n| 1..=n - 1,
        |n, p| {
            if p == n - 1 {
                star(n).unwrap()
            } else if p == n - 2 {
                double_star(n, 2).unwrap()
            } else {
                kite(n, p).unwrap()
            }
        },
    )
}

fn edge_addition() -> Outcome {
    let start = Instant::now();
    let opts = SearchOptions::with_workers(1);
    let mut margin = f64::INFINITY;
    let mut additions = 0;
    for n in 1..=6 {
        let r = check_edge_lemma(n, &opts).map_err(|e| e.to_string())?;
        check(r.passed(), || {
            format!("n={n}: counterexample {:?}", r.counterexample)
        })?;
        additions += r.additions_checked;
        if let Some(m) = r.min_margin {
            margin = margin.min(m);
        }
    }
    check(margin > 0.0, || format!("min margin {margin}"))?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:.2?}")
    })?;
    Ok(format!("{additions} additions, min margin {margin:.6}"))
}

fn scalar_grid() -> Outcome {
    let report = check_scalar_lemmas(&LemmaGrid::default()).map_err(|e| e.to_string())?;
    let failing: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| {
            format!(
                "{} fails at {}/{} points (worst {:.6} at {})",
                c.name, c.failures, c.points, c.min_margin, c.worst_at
            )
        })
        .collect();
    check(failing.is_empty(), || failing.join("; "))?;
    Ok(format!("{} properties", report.checks.len()))
}

fn enumeration_counts() -> Outcome {
    let labeled = SearchOptions {
        strategy: Strategy::LabeledMasks,
        ..SearchOptions::with_workers(1)
    };
    let extension = SearchOptions::with_workers(1);
    for (n, want) in [(4, 6), (5, 21), (6, 112), (7, 853)] {
        let base = enumerate_classes(n, &labeled).map_err(|e| e.to_string())?;
        check(base.len() == want, || {
            format!("n={n}: {} labelled classes", base.len())
        })?;
        let fast = enumerate_classes(n, &extension).map_err(|e| e.to_string())?;
        check(fast == base, || format!("n={n}: vertex extension differs"))?;
    }
    Ok("6, 21, 112, 853".into())
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect::<Vec<_>>());
    let header = lines.next().unwrap_or_default();
    (header, lines.collect())
}

fn audit_regression() -> Outcome {
    let out = audit(
        &AuditFamily::ALL,
        OrderRange { min: 4, max: 7 },
        Format::Csv,
    )
    .map_err(|e| e.to_string())?;
    let golden = std::fs::read_to_string(golden_path("audit.csv")).map_err(|e| e.to_string())?;
    check(out.text == golden, || {
        "audit table differs from golden file".into()
    })?;
    let (header, rows) = parse_csv(&out.text);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    let pinned = [
        ("chromatic", 5, 3, false, 4.2466424, 6.6466032),
        ("independence", 4, 2, false, 2.8284271, 3.9148837),
        ("pendant", 5, 4, false, 1.3856406, 3.0983867),
        ("pendant-clique-term", 6, 2, true, 2.4494897, 2.4494897),
    ];
    for (family, n, k, agree, printed, direct) in pinned {
        let row = rows
            .iter()
            .find(|r| {
                r[col("family")] == family
                    && r[col("n")] == n.to_string()
                    && r[col("param")] == k.to_string()
            })
            .ok_or_else(|| format!("{family}({n},{k}) missing"))?;
        let num = |c: &str| row[col(c)].parse::<f64>().unwrap();
        check(row[col("agree")] == agree.to_string(), || {
            format!("{family}({n},{k}) agree = {}", row[col("agree")])
        })?;
        // Stated values carry seven decimals, some off in the last place.
        check((num("printed") - printed).abs() < 1e-6, || {
            format!("{family}({n},{k}) printed {}", num("printed"))
        })?;
        check((num("direct") - direct).abs() < 1e-6, || {
            format!("{family}({n},{k}) direct {}", num("direct"))
        })?;
    }
    Ok("4 pinned verdicts, golden table identical".into())
}

fn split_scan() -> Outcome {
    for p in 3..=10 {
        let values: Vec<(usize, f64)> = (1..p)
            .map(|t| (t, double_star_split_value(p, t).unwrap()))
            .collect();
        let best = values.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
        let argmax: BTreeSet<usize> = values
            .iter()
            .filter(|v| best - v.1 <= INDEX_TOL)
            .map(|v| v.0)
            .collect();
        check(argmax == BTreeSet::from([1, p - 1]), || {
            format!("p={p}: argmax {argmax:?}")
        })?;
    }
    Ok("p = 3..10".into())
}

fn determinism() -> Outcome {
    let outputs: Vec<String> = [1, 2, 4]
        .into_iter()
        .map(|workers| {
            verify(&SweepConfig {
                workers,
                ..Default::default()
            })
            .map(|o| o.text)
        })
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    check(outputs.iter().all(|o| o == &outputs[0]), || {
        "outputs differ across worker counts".into()
    })?;
    let rows = outputs[0].lines().count() - 1;
    Ok(format!("{rows} rows identical for 1, 2, 4 workers"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("unit index values", unit_values),
        ("chromatic-number sweep", chromatic_sweep),
        ("independence-number sweep", independence_sweep),
        ("pendant-count sweep", pendant_sweep),
        ("edge addition increases index", edge_addition),
        ("scalar lemma grid", scalar_grid),
        ("connected class counts", enumeration_counts),
        ("formula audit regression", audit_regression),
        ("double-star split endpoints", split_scan),
        ("worker-count determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
