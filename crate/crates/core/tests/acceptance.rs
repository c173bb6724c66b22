//! Exit criteria, one line per criterion. Runs without the libtest harness
//! so the PASS/FAIL lines are always printed.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use qdivisor::*;

type Outcome = Result<(), String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

fn within(budget: Duration, start: Instant) -> Outcome {
    let spent = start.elapsed();
    ensure!(spent < budget, "took {spent:?}, budget {budget:?}");
    Ok(())
}

fn run_binary(args: &[&str]) -> Result<(i32, String), String> {
    let o = Command::new(env!("CARGO_BIN_EXE_qdivisor"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        o.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&o.stdout).into_owned(),
    ))
}

fn divisor_sum_rows() -> Outcome {
    let start = Instant::now();
    let (code, out) = run_binary(&[
        "table",
        "--max",
        "10",
        "--kinds",
        "sigma,sigma-even,sigma-odd,tilde,bar",
        "--source",
        "oracle",
        "--format",
        "csv",
    ])?;
    ensure!(code == 0, "exit status {code}");
    let rows: [[i64; 10]; 5] = [
        [1, 3, 4, 7, 6, 12, 8, 15, 13, 18],
        [0, 2, 0, 6, 0, 8, 0, 14, 0, 12],
        [1, 1, 4, 1, 6, 4, 8, 1, 13, 6],
        [1, -1, 4, -5, 6, -4, 8, -13, 13, -6],
        [1, 1, 4, 5, 6, 4, 8, 13, 13, 6],
    ];
    let mut expected = String::from("n,sigma,sigma-even,sigma-odd,tilde,bar\n");
    for n in 0..10 {
        let cells: Vec<String> = rows.iter().map(|r| r[n].to_string()).collect();
        expected += &format!("{},{}\n", n + 1, cells.join(","));
    }
    ensure!(out == expected, "got\n{out}");
    // the default plain layout carries the same numbers
    let (code, plain) = run_binary(&[
        "table",
        "--max",
        "10",
        "--kinds",
        "sigma,sigma-even,sigma-odd,tilde,bar",
        "--source",
        "oracle",
    ])?;
    ensure!(code == 0, "plain exit status {code}");
    for (n, line) in plain.lines().skip(1).enumerate() {
        let cells: Vec<i64> = line
            .split_whitespace()
            .map(|c| c.parse().unwrap())
            .collect();
        let want: Vec<i64> = std::iter::once(n as i64 + 1)
            .chain(rows.iter().map(|r| r[n]))
            .collect();
        ensure!(cells == want, "plain row {}: {line}", n + 1);
    }
    within(Duration::from_secs(1), start)
}

fn worked_examples() -> Outcome {
    let sigma = sigma_recurrence_table(8).map_err(|e| e.to_string())?;
    let tilde = tilde_recurrence_table(10).map_err(|e| e.to_string())?;
    let bar = bar_recurrence_table(10).map_err(|e| e.to_string())?;
    let checks = [
        ("σ(7)", sigma.get(7), 8),
        ("σ(8)", sigma.get(8), 15),
        ("σ̃(9)", tilde.get(9), 13),
        ("σ̃(10)", tilde.get(10), -6),
        ("σ̄(10)", bar.get(10), 6),
    ];
    for (label, got, want) in checks {
        ensure!(
            got == Some(&BigInt::from(want)),
            "{label} = {got:?}, want {want}"
        );
    }
    Ok(())
}

fn corollary_witnesses() -> Outcome {
    let tri = balance_triangular(11).map_err(|e| e.to_string())?;
    ensure!(
        tri.left == BigInt::from(26) && tri.right == BigInt::from(26),
        "{tri:?}"
    );
    let hex = balance_hexagonal(11).map_err(|e| e.to_string())?;
    ensure!(
        hex.left == BigInt::from(19) && hex.right == BigInt::from(19),
        "{hex:?}"
    );
    Ok(())
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let (code, out) = run_binary(&["verify", "--identities", "all", "--order", "2000"])?;
    ensure!(code == 0, "exit status {code}\n{out}");
    let passes = out.lines().filter(|l| l.starts_with("PASS ")).count();
    ensure!(passes == 13, "{passes} PASS lines\n{out}");
    within(Duration::from_secs(30), start)?;

    let report = check_identity(IdentityName::PentagonalTheorem, 26);
    ensure!(
        report.passed,
        "pentagonal theorem failed at 26: {:?}",
        report.first_mismatch
    );
    let support = report.support.ok_or("no support reported")?;
    let expected: Vec<(u64, BigInt)> = [0u64, 1, 2, 5, 7, 12, 15, 22, 26]
        .into_iter()
        .zip(ints(&[1, -1, -1, 1, 1, -1, -1, 1, 1]))
        .collect();
    ensure!(support == expected, "support {support:?}");
    Ok(())
}

fn recurrences_at_scale() -> Outcome {
    let start = Instant::now();
    let max_n = 100_000;
    let pairs = [
        (sigma_recurrence_table(max_n), DivisorSumKind::Sigma),
        (tilde_recurrence_table(max_n), DivisorSumKind::SigmaTilde),
        (bar_recurrence_table(max_n), DivisorSumKind::SigmaBar),
    ];
    for (table, kind) in pairs {
        let table = table.map_err(|e| e.to_string())?;
        let sieve = divisor_table(max_n, kind).map_err(|e| e.to_string())?;
        if let Some(i) = table
            .values()
            .iter()
            .zip(sieve.values())
            .position(|(a, b)| a != b)
        {
            return Err(format!("{kind} differs at n = {}", i + 1));
        }
        ensure!(table.values().len() == max_n, "{kind} table length");
    }
    within(Duration::from_secs(60), start)
}

fn partitions_three_ways() -> Outcome {
    let max_n = 2000;
    let recurrence = partition_table(max_n);
    let dp = common::partitions_dp(max_n);
    let series = build_named_series(NamedSeries::EulerProduct, max_n)
        .inverse()
        .map_err(|e| e.to_string())?;
    ensure!(
        recurrence.values() == &dp[..],
        "recurrence differs from dynamic program"
    );
    ensure!(
        series.coeffs() == &dp[..],
        "series inverse differs from dynamic program"
    );
    let p2000 = &dp[max_n];
    ensure!(
        p2000.to_string() == "4720819175619413888601432406799959512200344166",
        "p(2000) = {p2000}"
    );
    Ok(())
}

fn corollary_sweeps() -> Outcome {
    let max_n = 10_000;
    let tri = qdivisor::recurrences::triangular_balance_sweep(max_n).map_err(|e| e.to_string())?;
    let hex = qdivisor::recurrences::hexagonal_balance_sweep(max_n).map_err(|e| e.to_string())?;
    let tri_bad: Vec<u64> = tri
        .iter()
        .filter(|p| !is_triangular(p.n as i64) && !p.is_balanced())
        .map(|p| p.n)
        .collect();
    let hex_bad: Vec<u64> = hex
        .iter()
        .filter(|p| eps_h(p.n as i64) == 0 && !p.is_balanced())
        .map(|p| p.n)
        .collect();
    ensure!(tri_bad.is_empty(), "triangular violations at {tri_bad:?}");
    ensure!(hex_bad.is_empty(), "hexagonal violations at {hex_bad:?}");
    ensure!(tri.len() == max_n && hex.len() == max_n, "sweep length");
    Ok(())
}

fn figurate_rows() -> Outcome {
    let row = |kind: FigurateKind, sign: i64| -> Vec<u64> {
        let listed = figurate_below(kind, 100);
        (0..=5)
            .map(|k| {
                listed
                    .iter()
                    .find(|&&(m, _)| m == sign * k)
                    .map(|&(_, v)| v)
                    .expect("index listed")
            })
            .collect()
    };
    let expected: [(&str, Vec<u64>, [u64; 6]); 5] = [
        (
            "e_k",
            row(FigurateKind::Pentagonal, 1),
            [0, 1, 5, 12, 22, 35],
        ),
        (
            "e_-k",
            row(FigurateKind::Pentagonal, -1),
            [0, 2, 7, 15, 26, 40],
        ),
        (
            "t_k",
            row(FigurateKind::Triangular, 1),
            [0, 1, 3, 6, 10, 15],
        ),
        (
            "h_k",
            row(FigurateKind::Hexagonal, 1),
            [0, 1, 6, 15, 28, 45],
        ),
        (
            "h_-k",
            row(FigurateKind::Hexagonal, -1),
            [0, 3, 10, 21, 36, 55],
        ),
    ];
    for (label, got, want) in expected {
        ensure!(got == want, "{label}: {got:?}");
    }
    Ok(())
}

const CASES: u32 = 256;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn series_strategy(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-40i64..40, 1..=max_order + 1)
        .prop_map(|c| TruncatedSeries::from_i64s(&c).unwrap())
}

fn unit_series(
    order: usize,
    constant: impl Strategy<Value = i64>,
) -> impl Strategy<Value = TruncatedSeries> {
    (constant, prop::collection::vec(-40i64..40, order)).prop_map(|(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        TruncatedSeries::from_i64s(&c).unwrap()
    })
}

fn suite<S: Strategy>(
    label: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    runner()
        .run(&strategy, test)
        .map_err(|e| format!("{label}: {e}"))
}

fn property_suites() -> Outcome {
    suite(
        "ring axioms",
        (
            series_strategy(40),
            series_strategy(40),
            series_strategy(40),
        ),
        |(a, b, c)| {
            let order = a.order().min(b.order()).min(c.order());
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &TruncatedSeries::one(a.order()), a.clone());
            let distributes = &a.truncate(order) * &(&b.truncate(order) + &c.truncate(order));
            prop_assert_eq!(
                distributes,
                &(&a * &b).truncate(order) + &(&a * &c).truncate(order)
            );
            Ok(())
        },
    )?;

    suite(
        "inverse",
        unit_series(64, prop_oneof![Just(1i64), Just(-1i64)]),
        |a| {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(inv.order(), 64);
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(64));
            Ok(())
        },
    )?;

    suite(
        "leibniz",
        (series_strategy(40), series_strategy(40)),
        |(a, b)| {
            prop_assume!(a.order().min(b.order()) >= 1);
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            let order = lhs.order();
            prop_assert!(lhs.agrees_to(&rhs, order));
            Ok(())
        },
    )?;

    suite(
        "log-derivative additivity",
        (unit_series(40, Just(1i64)), unit_series(30, Just(1i64))),
        |(f, g)| {
            let product = (&f * &g).q_log_derivative().unwrap();
            let sum = &f.q_log_derivative().unwrap() + &g.q_log_derivative().unwrap();
            prop_assert_eq!(product.order(), 30);
            prop_assert_eq!(product, sum);
            Ok(())
        },
    )?;

    let injection = (
        0..IdentityName::ALL.len(),
        3usize..80,
        any::<prop::sample::Index>(),
        any::<bool>(),
    );
    suite(
        "mismatch injection",
        injection,
        |(which, order, at, left)| {
            let mut sides = build_sides(IdentityName::ALL[which], order);
            prop_assume!(!sides.indices.is_empty());
            let i = at.index(sides.indices.len());
            if left {
                sides.lhs[i] += 1;
            } else {
                sides.rhs[i] += 1;
            }
            let report = qdivisor::identity::report(&sides, Duration::ZERO);
            prop_assert!(!report.passed);
            prop_assert_eq!(
                report.first_mismatch.map(|m| m.index),
                Some(sides.indices[i])
            );
            Ok(())
        },
    )?;
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            1,
            "divisor-sum table n <= 10 through the CLI",
            divisor_sum_rows,
        ),
        (2, "worked examples via recurrences alone", worked_examples),
        (3, "corollary witnesses at n = 11", corollary_witnesses),
        (
            4,
            "all 13 identities at order 2000; pentagonal support at 26",
            identity_suite,
        ),
        (
            5,
            "sigma/tilde/bar recurrences equal the sieve for n <= 10^5",
            recurrences_at_scale,
        ),
        (
            6,
            "partition numbers three ways through 2000",
            partitions_three_ways,
        ),
        (7, "corollary balance sweeps through 10^4", corollary_sweeps),
        (8, "figurate values for |k| <= 5", figurate_rows),
        (
            9,
            "randomized property suites (256 cases each)",
            property_suites,
        ),
    ];

    let mut failed = 0;
    for (id, label, criterion) in criteria {
        let start = Instant::now();
        let outcome = criterion();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => println!("[PASS] criterion {id}: {label} ({ms:.0} ms)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {label} ({ms:.0} ms): {why}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", 9 - failed, 9);
    if failed > 0 {
        std::process::exit(1);
    }
}
