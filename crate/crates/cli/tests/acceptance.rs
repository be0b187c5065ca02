//! Acceptance gate. Every criterion runs at its pinned bound and tolerance
//! and prints one PASS/FAIL line; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use clap::Parser;
use reciprocity_cli::config::{Cli, RunConfig};
use reciprocity_cli::execute;
use reciprocity_core::{
    classify_points, count_large_residues, epsilon_product_full, epsilon_product_half,
    find_counterexample, floor_sum, legendre_eisenstein, legendre_euler, legendre_gauss,
    odd_primes_below, orbits, partition_counts, prime_pairs_below, residue_table, sweep,
    verify_claim, ClaimId, ClaimSelector, LatticeRect, Orbit, PrimePair, Sign, SweepConfig,
    Witness, DEFAULT_ENUMERATION_CAP,
};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn config(args: &[&str]) -> RunConfig {
    let mut full = vec!["reciprocity", "--cap", "1000000"];
    full.extend_from_slice(args);
    RunConfig::try_from(Cli::try_parse_from(full).unwrap()).unwrap()
}

fn oracle_agreement() -> Verdict {
    let start = Instant::now();
    let mut checked = 0u64;
    for p in odd_primes_below(200) {
        let m = p.get();
        for a in 1..m {
            let euler = legendre_euler(a as i64, p);
            let gauss = legendre_gauss(a, p).map_err(|e| e.to_string())?;
            ensure(gauss == euler, || {
                format!("gauss({a}/{m}) = {gauss}, euler = {euler}")
            })?;
            checked += 1;
        }
        // odd representatives of every nonzero residue class
        for q in (1..2 * m).step_by(2).filter(|q| q % m != 0) {
            let eis = legendre_eisenstein(q, p).map_err(|e| e.to_string())?;
            let euler = legendre_euler(q as i64, p);
            ensure(eis == euler, || {
                format!("eisenstein({q}/{m}) = {eis}, euler = {euler}")
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}, limit 10s")
    })?;
    Ok(format!(
        "{checked} symbol evaluations agree in {elapsed:.2?}"
    ))
}

fn reciprocity() -> Verdict {
    let pairs = prime_pairs_below(200);
    for &pair in &pairs {
        let o =
            verify_claim(ClaimId::C8, pair, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
        ensure(o.holds, || {
            format!("C8 fails on {pair}: {}", o.witness.summary())
        })?;
    }
    Ok(format!("C8 holds on all {} ordered pairs", pairs.len()))
}

fn partition_identity() -> Verdict {
    let big = prime_pairs_below(1000);
    for &pair in &big {
        let (p, q) = (pair.p(), pair.q());
        let sx = floor_sum(q.get(), p, p.half()).map_err(|e| e.to_string())?;
        let sy = floor_sum(p.get(), q, q.half()).map_err(|e| e.to_string())?;
        ensure(sx + sy == pair.reciprocity_exponent(), || {
            format!("{pair}: {sx} + {sy} != {}", pair.reciprocity_exponent())
        })?;
    }
    let small = prime_pairs_below(100);
    for &pair in &small {
        let rect = LatticeRect::new(pair);
        let brute = classify_points(&rect, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
        let counted = partition_counts(&rect);
        ensure(brute == counted, || {
            format!("{pair}: brute {brute:?} vs floor sums {counted:?}")
        })?;
    }
    Ok(format!(
        "floor-sum identity on {} pairs below 1000, brute force agrees on {} pairs below 100",
        big.len(),
        small.len()
    ))
}

fn parity_congruence() -> Verdict {
    let pairs = prime_pairs_below(200);
    for &pair in &pairs {
        let (p, q) = (pair.p(), pair.q());
        let n_pq = count_large_residues(q.get(), p)
            .map_err(|e| e.to_string())?
            .n_large;
        let n_qp = count_large_residues(p.get(), q)
            .map_err(|e| e.to_string())?
            .n_large;
        ensure((n_pq + n_qp) % 2 == pair.reciprocity_exponent() % 2, || {
            format!("{pair}: {n_pq} + {n_qp} vs {}", pair.reciprocity_exponent())
        })?;
    }
    Ok(format!(
        "N_p(q) + N_q(p) has the parity of (p-1)(q-1)/4 on {} pairs",
        pairs.len()
    ))
}

fn residue_involution() -> Verdict {
    let mut checked = 0u64;
    for p in odd_primes_below(200) {
        let m = p.get();
        for q in (1..2 * m).filter(|q| q % m != 0) {
            let table = residue_table(q, p).map_err(|e| e.to_string())?;
            for x in 1..m {
                let (a, b) = (table.step(x), table.step(m - x));
                ensure(b.remainder == m - a.remainder, || {
                    format!(
                        "q={q} p={m} x={x}: r_(p-x)={} r_x={}",
                        b.remainder, a.remainder
                    )
                })?;
            }
            let full = epsilon_product_full(q, p).map_err(|e| e.to_string())?;
            ensure(full == Sign::from_parity(p.half()), || {
                format!("full product q={q} p={m} is {full}")
            })?;
            let half = epsilon_product_half(q, p).map_err(|e| e.to_string())?;
            let n = count_large_residues(q, p)
                .map_err(|e| e.to_string())?
                .n_large;
            ensure(half == Sign::from_parity(n), || {
                format!("half product q={q} p={m} is {half}, N={n}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "reflection, full and half sign products hold on {checked} coprime (q, p)"
    ))
}

fn fixed_point_characterization() -> Verdict {
    let report = sweep(&SweepConfig::new(50, [ClaimId::C4])).map_err(|e| e.to_string())?;
    let mut failing = 0;
    for v in &report.verdicts {
        let both_three = v.p % 4 == 3 && v.q % 4 == 3;
        ensure(v.holds == Some(!both_three), || {
            format!("({}, {}): verdict {:?}", v.p, v.q, v.holds)
        })?;
        if both_three {
            failing += 1;
            let pair = PrimePair::from_u64(v.p, v.q).map_err(|e| e.to_string())?;
            let o = verify_claim(ClaimId::C4, pair, DEFAULT_ENUMERATION_CAP)
                .map_err(|e| e.to_string())?;
            let expected = Witness::CentralFixedPoints {
                fixed: vec![((v.p + 1) / 4, (v.q + 1) / 4)],
            };
            ensure(o.witness == expected, || {
                format!("{pair}: witness {:?}", o.witness)
            })?;
        }
    }
    Ok(format!(
        "C fixed-point-free exactly off p = q = 3 (mod 4); {failing} failing pairs each with the single centre"
    ))
}

fn counterexample_reproduction() -> Verdict {
    let c5 = find_counterexample(
        ClaimSelector::printed(ClaimId::C5),
        20,
        DEFAULT_ENUMERATION_CAP,
    )
    .map_err(|e| e.to_string())?
    .ok_or("no C5 counterexample below 20")?;
    let c6 = find_counterexample("C6-equality".parse().unwrap(), 10, DEFAULT_ENUMERATION_CAP)
        .map_err(|e| e.to_string())?
        .ok_or("no C6-equality counterexample below 10")?;
    let c6_ok = match &c6.witness {
        Witness::LabelCounts {
            n_p_q,
            n_q_p,
            s_plus,
            s_minus,
        } => n_p_q != s_plus || n_q_p != s_minus,
        _ => false,
    };
    let c6_seven_five = verify_claim(
        ClaimId::C6,
        PrimePair::from_u64(7, 5).unwrap(),
        DEFAULT_ENUMERATION_CAP,
    )
    .map_err(|e| e.to_string())?;
    ensure(c6_ok, || {
        format!(
            "C6-equality witness does not show N != |S+-|: {:?}",
            c6.witness
        )
    })?;
    ensure(
        c6_seven_five.witness
            == Witness::LabelCounts {
                n_p_q: 1,
                n_q_p: 1,
                s_plus: 3,
                s_minus: 3,
            },
        || format!("(7, 5) C6 witness {:?}", c6_seven_five.witness),
    )?;

    let expected_pair = PrimePair::from_u64(5, 13).unwrap();
    let expected_link = ((1, 2), (2, 5), 3, 1);
    let link = match &c5.witness {
        Witness::SameSidePairs { pairs } if pairs.len() == 1 => Some((
            pairs[0].first.coords(),
            pairs[0].second.coords(),
            pairs[0].first.side_value,
            pairs[0].second.side_value,
        )),
        _ => None,
    };
    ensure(
        c5.pair == expected_pair && link == Some(expected_link),
        || {
            format!(
            "find_counterexample(C5, 20) returned {} with {}; expected (5, 13) with {{(1,2),(2,5)}} side values 3, 1",
            c5.pair,
            c5.witness.summary()
        )
        },
    )?;
    Ok(format!(
        "C5 -> {} [{}]; C6-equality -> {} [{}]",
        c5.pair,
        c5.witness.summary(),
        c6.pair,
        c6.witness.summary()
    ))
}

fn orbit_structure() -> Verdict {
    let sizes = |p, q| -> Result<Vec<usize>, String> {
        let rect = LatticeRect::from_u64(p, q).map_err(|e| e.to_string())?;
        Ok(orbits(&rect, DEFAULT_ENUMERATION_CAP)
            .map_err(|e| e.to_string())?
            .iter()
            .map(Orbit::size)
            .collect())
    };
    ensure(sizes(5, 13)? == vec![4, 4, 4], || {
        format!("rect(5,13) sizes {:?}", sizes(5, 13))
    })?;
    ensure(sizes(3, 7)? == vec![2, 1], || {
        format!("rect(3,7) sizes {:?}", sizes(3, 7))
    })?;
    let pairs = prime_pairs_below(50);
    for &pair in &pairs {
        let rect = LatticeRect::new(pair);
        let s = sizes(pair.p().get(), pair.q().get())?;
        ensure(s.iter().all(|k| matches!(k, 1 | 2 | 4)), || {
            format!("{pair}: sizes {s:?}")
        })?;
        ensure(s.iter().sum::<usize>() as u64 == rect.total(), || {
            format!("{pair}: sizes do not sum to |S|")
        })?;
    }
    Ok(format!(
        "rect(5,13) = 3 x 4, rect(3,7) = [2, 1], sizes in {{1,2,4}} summing to |S| on {} pairs",
        pairs.len()
    ))
}

fn determinism() -> Verdict {
    let cfg = config(&["sweep", "--max", "100"]);
    let a = execute(&cfg).map_err(|e| e.to_string())?.body;
    let b = execute(&cfg).map_err(|e| e.to_string())?.body;
    ensure(a == b, || {
        "two identical sweeps produced different JSON".to_string()
    })?;
    let svg_cfg = config(&["render", "--p", "3", "--q", "7"]);
    let s1 = execute(&svg_cfg).map_err(|e| e.to_string())?.body;
    let s2 = execute(&svg_cfg).map_err(|e| e.to_string())?.body;
    ensure(s1 == s2, || {
        "SVG for rect(3,7) differs between runs".to_string()
    })?;
    ensure(s1 == include_str!("golden/rect_3_7.svg"), || {
        "SVG for rect(3,7) differs from golden file".to_string()
    })?;
    Ok(format!(
        "sweep JSON ({} bytes) and rect(3,7) SVG byte-identical",
        a.len()
    ))
}

fn full_sweep_runtime() -> Verdict {
    let cfg = config(&["sweep", "--max", "200"]);
    let start = Instant::now();
    let out = execute(&cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, limit 60s")
    })?;
    Ok(format!(
        "all 13 claims over 1980 pairs in {elapsed:.2?} ({} bytes)",
        out.body.len()
    ))
}

type Criterion = (&'static str, fn() -> Verdict);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 oracle agreement", oracle_agreement),
        ("2 reciprocity", reciprocity),
        ("3 partition identity", partition_identity),
        ("4 parity congruence", parity_congruence),
        ("5 residue involution suite", residue_involution),
        (
            "6 fixed-point characterization",
            fixed_point_characterization,
        ),
        ("7 counterexample reproduction", counterexample_reproduction),
        ("8 orbit structure", orbit_structure),
        ("9 determinism", determinism),
        ("10 full sweep runtime", full_sweep_runtime),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                println!("[FAIL] criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
