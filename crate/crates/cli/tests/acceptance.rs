//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use dynnikov_cli::OutputRecord;
use dynnikov_core::oracle::{
    bfs_distances, check_covering, dynnikov_census, find_simple_cycles, torus_census, CayleySpec, DynnikovPlane,
    TorusPlane,
};
use dynnikov_core::{
    apply_braid, apply_twist, conjugation_length, ecf_expand, phi, phi_inverse, untwist, BigInt, DynnikovCoord,
    Generator, Mat2, TorusCoord,
};
use num_rational::BigRational;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn dc(a: i64, b: i64) -> DynnikovCoord {
    DynnikovCoord::new(a, b).unwrap()
}

fn tc(p: i64, q: i64) -> TorusCoord {
    TorusCoord::new(p, q).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn median_time(mut f: impl FnMut()) -> Duration {
    let mut samples: Vec<Duration> = (0..11)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    samples.sort();
    samples[5]
}

fn golden(start: (i64, i64), path: &[(i64, i64)], word: &str) -> Result<Duration, String> {
    let d = dc(start.0, start.1);
    let u = untwist(&d).map_err(|e| e.to_string())?;
    let expected: Vec<DynnikovCoord> = path.iter().map(|&(a, b)| dc(a, b)).collect();
    ensure(u.path == expected, || format!("path {:?}", u.path))?;
    ensure(u.word.to_string() == word, || format!("word {}", u.word))?;
    Ok(median_time(|| {
        std::hint::black_box(untwist(std::hint::black_box(&d)).unwrap());
    }))
}

fn criterion_1() -> Outcome {
    let t = golden(
        (10, 3),
        &[(10, 3), (-7, -3), (4, 3), (-1, -3), (-1, -1), (0, 1)],
        "tc td tc td td",
    )?;
    within(t, Duration::from_millis(1))?;
    Ok(format!("untwist(10,3) exact 5-step path, median {t:.2?} (limit 1 ms)"))
}

fn criterion_2() -> Outcome {
    golden((3, 10), &[(3, 10), (3, 4), (1, -2), (1, 0), (-1, 0)], "tc tc td- td-")?;
    Ok("untwist(3,10) exact 4-step path".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for a in -100i64..=100 {
        for b in -100i64..=100 {
            let Ok(d) = DynnikovCoord::new(a, b) else { continue };
            for g in Generator::ALL {
                let s = g.square_root();
                checked += 1;
                if apply_braid(s, &apply_braid(s, &d)) != apply_twist(g, &d) {
                    mismatches.push((g, d.clone()));
                }
            }
        }
    }
    let t = start.elapsed();
    ensure(mismatches.is_empty(), || format!("{} mismatches, first {:?}", mismatches.len(), mismatches[0]))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("{checked} (point, generator) pairs, 0 mismatches, {t:.2?} (limit 1 s)"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for x in -200i64..=200 {
        for y in -200i64..=200 {
            if let Ok(d) = DynnikovCoord::new(x, y) {
                checked += 1;
                ensure(phi(&phi_inverse(&d)) == d, || format!("phi(phi_inverse{d:?}) = {:?}", phi(&phi_inverse(&d))))?;
            }
            if let Ok(t) = TorusCoord::new(x, y) {
                checked += 1;
                let img = phi(&t);
                ensure(phi(&-&t) == img, || format!("phi{t:?} != phi(-{t:?})"))?;
                let back = phi_inverse(&img);
                ensure(back == t || back == -&t, || format!("phi_inverse(phi{t:?}) = {back:?}"))?;
            }
        }
    }
    Ok(format!("{checked} round trips, 0 mismatches"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let map = bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(12)).map_err(|e| e.to_string())?;
    for (v, dist) in map.iter() {
        let u = untwist(v).map_err(|e| format!("{v:?}: {e}"))?;
        let len = conjugation_length(v).map_err(|e| format!("{v:?}: {e}"))?;
        ensure(u.word.len() == dist as usize && len == BigInt::from(dist), || {
            format!("{v:?}: bfs {dist}, untwist {}, ecf {len}", u.word.len())
        })?;
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(30))?;
    Ok(format!("{} curves to depth 12, 0 mismatches, {t:.2?} (limit 30 s)", map.len()))
}

fn criterion_6() -> Outcome {
    let d = dynnikov_census(50).map_err(|e| e.to_string())?;
    ensure(d.is_consistent(), || format!("Dynnikov census: {:?}, unresolved {}", d.mismatches.first(), d.unresolved))?;
    ensure(d.orbit_count() == 3, || format!("{} Dynnikov orbits", d.orbit_count()))?;
    let placed: usize = d.components.iter().map(|c| c.count).sum();
    ensure(placed == d.vertices, || format!("{placed} of {} curves placed", d.vertices))?;

    let t = torus_census(50).map_err(|e| e.to_string())?;
    ensure(t.is_consistent(), || format!("torus census: {:?}, unresolved {}", t.mismatches.first(), t.unresolved))?;
    ensure(t.orbit_count() == 5, || format!("{} torus orbits", t.orbit_count()))?;
    let placed: usize = t.components.iter().map(|c| c.count).sum();
    ensure(placed == t.vertices, || format!("{placed} of {} vectors placed", t.vertices))?;
    Ok(format!("{} curves in 3 orbits, {} vectors in 5 orbits, 0 mismatches", d.vertices, t.vertices))
}

fn evaluate(quotients: &[BigInt], trailing_one: bool) -> Option<BigRational> {
    let mut tail: Option<BigRational> = trailing_one.then(BigRational::one);
    for q in quotients.iter().rev() {
        let head = BigRational::from_integer(q.clone());
        tail = Some(match tail {
            None => head,
            Some(t) if t.is_zero() => return None,
            Some(t) => head + t.recip(),
        });
    }
    tail
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for m in -200i64..=200 {
        for n in -200i64..=200 {
            if num_gcd(m, n) != 1 {
                continue;
            }
            checked += 1;
            let e = ecf_expand(m, n).map_err(|e| format!("{m}/{n}: {e}"))?;
            let at = || format!("{m}/{n} -> {e}");
            if n != 0 {
                let value = evaluate(&e.quotients, e.trailing_one);
                ensure(value == Some(BigRational::new(m.into(), n.into())), at)?;
            }
            let ok_quotients = e
                .quotients
                .iter()
                .enumerate()
                .all(|(i, q)| (q % BigInt::from(2)).is_zero() && (i == 0 || !q.is_zero()));
            ensure(ok_quotients, at)?;
            if e.trailing_one && m * n != -1 {
                ensure(e.quotients.last() != Some(&BigInt::from(-2)), at)?;
            }
            let eps = i64::from(e.epsilon);
            if (m * n) % 2 == 0 {
                let r = e.quotients.len() as i64 - 1;
                ensure(r.rem_euclid(2) == m.rem_euclid(2), at)?;
            }
            let (terminal, congruent) = if m % 2 == 0 {
                (tc(0, eps), (n - eps).rem_euclid(4) == 0)
            } else if n % 2 == 0 {
                (tc(eps, 0), (m - eps).rem_euclid(4) == 0)
            } else {
                (tc(eps, eps), true)
            };
            ensure(e.terminal == terminal && congruent, at)?;
            let product = e.factors().iter().fold(Mat2::identity(), |acc, f| &acc * f);
            ensure(product.apply(&e.terminal) == tc(m, n), at)?;
        }
    }
    Ok(format!("{checked} coprime pairs, 0 violations"))
}

fn num_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn criterion_8() -> Outcome {
    let around_c = find_simple_cycles::<TorusPlane>(&tc(1, 0), 6).map_err(|e| e.to_string())?;
    ensure(around_c.is_empty(), || format!("cycles near (1,0): {around_c:?}"))?;
    let around_e = find_simple_cycles::<TorusPlane>(&tc(1, 1), 6).map_err(|e| e.to_string())?;
    ensure(around_e.len() == 1, || format!("{} cycles near (1,1)", around_e.len()))?;
    let mut cycle = around_e[0].clone();
    cycle.sort();
    let mut square = vec![tc(-1, -1), tc(-1, 1), tc(1, -1), tc(1, 1)];
    square.sort();
    ensure(cycle == square, || format!("cycle {:?}", around_e[0]))?;
    let relation = Mat2::u_pow(2) * Mat2::l_pow(-2) * Mat2::u_pow(2) * Mat2::l_pow(-2);
    ensure(relation.apply(&tc(1, 1)) == tc(1, 1), || "U^2 L^-2 U^2 L^-2 moves (1,1)".into())?;
    Ok("no cycle around (1,0); one 4-cycle on (±1,±1) around (1,1); relation fixes (1,1)".into())
}

fn criterion_9() -> Outcome {
    let r = check_covering(30, 12).map_err(|e| e.to_string())?;
    ensure(r.mismatches.is_empty(), || format!("{} mismatches, first {:?}", r.mismatches.len(), r.mismatches[0]))?;
    ensure(r.fibre_violations.is_empty(), || format!("fibre violations {:?}", r.fibre_violations))?;
    ensure(r.descent_violations == 0, || format!("{} descent violations", r.descent_violations))?;
    ensure(r.is_consistent(), || format!("component map {:?}", r.component_map))?;
    ensure(r.checked > 0, || "nothing compared".into())?;
    Ok(format!(
        "{} primitive vectors, distances up to {}, {} also by unrestricted search, 0 mismatches",
        r.checked, r.deepest, r.confirmed
    ))
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dynnikov"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by a signal")?;
    Ok((code, String::from_utf8(out.stdout).map_err(|e| e.to_string())?))
}

fn criterion_10() -> Outcome {
    let cases = [
        (["classify", "10", "3", "--json"], "c", "tc td tc td td", vec![(10, 3), (-7, -3), (4, 3), (-1, -3), (-1, -1), (0, 1)]),
        (["classify", "3", "10", "--json"], "e", "tc tc td- td-", vec![(3, 10), (3, 4), (1, -2), (1, 0), (-1, 0)]),
    ];
    for (args, class, word, path) in cases {
        let (code, first) = run_cli(&args)?;
        let (_, second) = run_cli(&args)?;
        ensure(code == 0, || format!("{args:?} exited {code}"))?;
        ensure(first == second, || format!("{args:?} output differs between runs"))?;
        let r: OutputRecord = serde_json::from_str(&first).map_err(|e| e.to_string())?;
        ensure(r.class.as_deref() == Some(class), || format!("class {:?}", r.class))?;
        ensure(r.word.as_ref().map(|w| w.join(" ")).as_deref() == Some(word), || format!("word {:?}", r.word))?;
        let got: Vec<(String, String)> = r
            .path
            .iter()
            .flatten()
            .map(|p| (p.a.to_string(), p.b.to_string()))
            .collect();
        let want: Vec<(String, String)> = path.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        ensure(got == want, || format!("path {got:?}"))?;
        let reparsed = serde_json::to_string_pretty(&r).map_err(|e| e.to_string())?;
        ensure(reparsed == first.trim_end(), || "record does not round-trip".into())?;
    }
    let start = Instant::now();
    let (code, _) = run_cli(&["verify", "--bound", "30", "--depth", "12"])?;
    ensure(code == 0, || format!("verify exited {code}"))?;
    Ok(format!("classify JSON byte-stable and exact; verify --bound 30 --depth 12 exit 0 in {:.2?}", start.elapsed()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden path A", criterion_1),
        ("golden path B", criterion_2),
        ("braid squares are twists", criterion_3),
        ("coordinate round trips", criterion_4),
        ("minimality at depth 12", criterion_5),
        ("orbit censuses", criterion_6),
        ("ECF contract", criterion_7),
        ("cycle structure", criterion_8),
        ("covering check", criterion_9),
        ("CLI contract", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
