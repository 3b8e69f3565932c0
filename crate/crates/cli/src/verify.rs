//! Batch cross-check of the closed forms against the brute-force oracle.

use dynnikov_core::oracle::{
    bfs_distances, bounded_distances, check_covering, dynnikov_census, edges_are_symmetric, find_simple_cycles,
    projected_class, torus_census, CayleySpec, DynnikovPlane, TorusPlane,
};
use dynnikov_core::{
    apply_braid, conjugation_length, phi, phi_inverse, untwist, BigInt, CurveClass,
    DynnikovCoord, Generator, Mat2, TorusCoord,
};

use crate::record::{CheckRecord, VerifyRecord};

/// Largest accepted `--bound`.
pub const MAX_BOUND: u64 = 500;
/// Largest accepted `--depth`; the ball at depth 13 already holds millions of curves.
pub const MAX_DEPTH: u32 = 13;
/// Cycle search radius; the only cycle has length 4.
const CYCLE_DEPTH: u32 = 6;
/// Radius of the unrestricted search confirming covering distances.
const COVERING_RADIUS: u32 = 12;

pub type TwistFn = fn(Generator, &DynnikovCoord) -> DynnikovCoord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    BoundTooSmall,
    DepthTooSmall,
    ResourceLimit(String),
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub bound: u64,
    pub depth: u32,
    pub twist: TwistFn,
}

impl VerifyConfig {
    pub fn new(bound: u64, depth: u32) -> Self {
        VerifyConfig {
            bound,
            depth,
            twist: dynnikov_core::apply_twist,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if self.bound < 1 {
            return Err(VerifyError::BoundTooSmall);
        }
        if self.depth < 1 {
            return Err(VerifyError::DepthTooSmall);
        }
        if self.bound > MAX_BOUND {
            return Err(VerifyError::ResourceLimit(format!("bound {} exceeds {MAX_BOUND}", self.bound)));
        }
        if self.depth > MAX_DEPTH {
            return Err(VerifyError::ResourceLimit(format!("depth {} exceeds {MAX_DEPTH}", self.depth)));
        }
        Ok(())
    }
}

/// `t_c` with its first branch negated, for exercising the checks.
pub fn faulty_twist(g: Generator, d: &DynnikovCoord) -> DynnikovCoord {
    let (a, b) = (d.a(), d.b());
    if g == Generator::Tc && *a >= BigInt::ZERO && b <= a {
        return DynnikovCoord::new(a - b, b.clone()).expect("nonzero on this branch");
    }
    dynnikov_core::apply_twist(g, d)
}

struct Check {
    name: &'static str,
    checked: u64,
    failures: u64,
    detail: String,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            checked: 0,
            failures: 0,
            detail: String::new(),
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn finish(self) -> CheckRecord {
        let detail = if self.detail.is_empty() {
            format!("{} failures", self.failures)
        } else {
            format!("{}; {} failures", self.detail, self.failures)
        };
        CheckRecord {
            name: self.name.to_string(),
            passed: self.failures == 0,
            checked: self.checked,
            detail,
            counterexample: self.counterexample,
        }
    }
}

fn square(n: i64) -> impl Iterator<Item = (i64, i64)> {
    (-n..=n).flat_map(move |x| (-n..=n).map(move |y| (x, y)))
}

fn sigma_squared(cfg: &VerifyConfig, n: i64) -> CheckRecord {
    let mut c = Check::new("sigma-squared");
    for (a, b) in square(n) {
        let Ok(d) = DynnikovCoord::new(a, b) else { continue };
        for g in Generator::ALL {
            let s = g.square_root();
            let twice = apply_braid(s, &apply_braid(s, &d));
            let twist = (cfg.twist)(g, &d);
            c.record(twice == twist, || format!("{g} at {d}: braid square {twice}, twist {twist}"));
        }
    }
    c.finish()
}

fn round_trips(n: i64) -> CheckRecord {
    let mut c = Check::new("round-trip");
    for (x, y) in square(n) {
        if let Ok(d) = DynnikovCoord::new(x, y) {
            let back = phi(&phi_inverse(&d));
            c.record(back == d, || format!("phi(phi_inverse{d}) = {back}"));
        }
        if let Ok(t) = TorusCoord::new(x, y) {
            let img = phi(&t);
            let ok = phi(&-&t) == img && phi_inverse(&img).same_curve(&t);
            c.record(ok, || format!("{t} maps to {img}, lifted back to {}", phi_inverse(&img)));
        }
    }
    c.finish()
}

fn minimality(cfg: &VerifyConfig) -> (CheckRecord, CheckRecord) {
    let mut c = Check::new("minimality");
    let mut sym = Check::new("edge-symmetry");
    let map = bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(cfg.depth)).expect("terminals are valid");
    for (v, dist) in map.iter() {
        let u = untwist(v).expect("the orbit of the reference curves is essential");
        let formula = conjugation_length(v).expect("essential");
        let lands = CurveClass::of_terminal(&apply_word_with(cfg.twist, &u.word, v)).is_some();
        let ok = u.word.len() == dist as usize && formula == BigInt::from(dist) && lands;
        c.record(ok, || {
            format!(
                "{v}: distance {dist}, untwisting word of length {} ({}), formula {formula}",
                u.word.len(),
                if lands { "certified" } else { "certificate fails" }
            )
        });
    }
    c.detail = format!("depth {}, {} curves, layers {:?}", cfg.depth, map.len(), map.layer_sizes());

    let ok = edges_are_symmetric::<DynnikovPlane>(&map);
    sym.record(ok, || "Dynnikov ball".to_string());
    let torus = bounded_distances::<TorusPlane>(cfg.bound).expect("bound validated");
    let ok = edges_are_symmetric::<TorusPlane>(&torus);
    sym.record(ok, || "torus box".to_string());
    sym.detail = format!("{} + {} vertices", map.len(), torus.len());
    (c.finish(), sym.finish())
}

fn apply_word_with(twist: TwistFn, w: &dynnikov_core::TwistWord, d: &DynnikovCoord) -> DynnikovCoord {
    w.letters().iter().fold(d.clone(), |acc, &g| twist(g, &acc))
}

fn censuses(bound: u64) -> (CheckRecord, CheckRecord) {
    let mut c = Check::new("dynnikov-census");
    let census = dynnikov_census(bound).expect("bound validated");
    c.record(census.is_consistent(), || census.mismatches.first().cloned().unwrap_or_else(|| "unresolved curves".into()));
    c.record(census.orbit_count() == 3, || format!("{} orbits", census.orbit_count()));
    c.detail = format!("{} curves, {} orbits", census.vertices, census.orbit_count());

    let mut t = Check::new("torus-census");
    let census = torus_census(bound).expect("bound validated");
    t.record(census.is_consistent(), || census.mismatches.first().cloned().unwrap_or_else(|| "unresolved vectors".into()));
    t.record(census.orbit_count() == 5, || format!("{} orbits", census.orbit_count()));
    t.detail = format!("{} vectors, {} orbits", census.vertices, census.orbit_count());
    (c.finish(), t.finish())
}

fn covering(cfg: &VerifyConfig) -> CheckRecord {
    let mut c = Check::new("covering");
    let r = check_covering(cfg.bound, cfg.depth.min(COVERING_RADIUS)).expect("bound validated");
    c.checked = r.checked as u64;
    for (v, x, y) in &r.mismatches {
        c.record(false, || format!("{v}: torus distance {x:?}, Dynnikov distance {y:?}"));
    }
    for v in &r.fibre_violations {
        c.record(false, || format!("fibre of phi{v} is not {{v, -v}}"));
    }
    c.record(r.descent_violations == 0, || format!("{} descent violations", r.descent_violations));
    for (orbit, classes) in &r.component_map {
        let ok = classes.len() == 1 && classes.contains(&projected_class(*orbit));
        c.record(ok, || format!("orbit {orbit} projects to {classes:?}"));
    }
    c.detail = format!(
        "{} vectors, deepest {}, {} confirmed by unrestricted search",
        r.checked, r.deepest, r.confirmed
    );
    c.finish()
}

fn cycles(cfg: &VerifyConfig) -> CheckRecord {
    let mut c = Check::new("cycles");
    let depth = cfg.depth.min(CYCLE_DEPTH);
    let tc = |p: i64, q: i64| TorusCoord::new(p, q).expect("nonzero");

    let around_c = find_simple_cycles::<TorusPlane>(&tc(1, 0), depth).expect("valid seed");
    c.record(around_c.is_empty(), || format!("cycle {:?} near (1,0)", around_c[0]));

    let around_e = find_simple_cycles::<TorusPlane>(&tc(1, 1), depth).expect("valid seed");
    let square: std::collections::BTreeSet<_> = [tc(1, 1), tc(-1, 1), tc(-1, -1), tc(1, -1)].into();
    let expected = if depth >= 2 { 1 } else { 0 };
    let ok = around_e.len() == expected
        && around_e.iter().all(|cy| cy.len() == 4 && cy.iter().cloned().collect::<std::collections::BTreeSet<_>>() == square);
    c.record(ok, || format!("{} cycles near (1,1): {around_e:?}", around_e.len()));

    let relation = Mat2::u_pow(2) * Mat2::l_pow(-2) * Mat2::u_pow(2) * Mat2::l_pow(-2);
    let end = relation.apply(&tc(1, 1));
    c.record(end == tc(1, 1), || format!("U^2 L^-2 U^2 L^-2 sends (1,1) to {end}"));
    c.detail = format!("radius {depth}");
    c.finish()
}

/// Runs every check; the report passes iff each one does.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyRecord, VerifyError> {
    cfg.validate()?;
    let n = cfg.bound as i64;
    let (mini, sym) = minimality(cfg);
    let (dc, tc) = censuses(cfg.bound);
    let checks = vec![sigma_squared(cfg, n), round_trips(n), mini, dc, tc, covering(cfg), cycles(cfg), sym];
    Ok(VerifyRecord {
        bound: cfg.bound,
        depth: cfg.depth,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
