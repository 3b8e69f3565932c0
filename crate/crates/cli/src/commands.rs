use std::fmt::Write;

use dynnikov_core::oracle::{bounded_distances, cayley_ball, CayleySpec, DynnikovPlane, TorusOrbit, TorusPlane};
use dynnikov_core::{
    classify as classify_curve, conjugation_length, curve_kind, ecf_expand_limited, phi, phi_inverse, untwist, BigInt,
    DynnikovCoord, EcfExpansion, Error, Family, Kind, TorusCoord, Track, Untwisting,
};
use num_traits::Signed;

use crate::int::Int;
use crate::record::{Ab, DistanceRecord, GraphEdge, GraphRecord, GraphVertex, OutputRecord};
use crate::verify::{self, VerifyConfig, VerifyError};

/// Largest `|a| + |b|` accepted by `distance`.
pub const MAX_DISTANCE_NORM: u64 = 1000;
/// Largest accepted `graph` depth.
pub const MAX_GRAPH_DEPTH: u32 = 10;
/// Longest untwisting word `classify` and `untwist` will spell out.
pub const MAX_WORD_LENGTH: u64 = 1_000_000;
/// Most quotients `ecf` will compute.
pub const MAX_QUOTIENTS: usize = 1_000_000;

fn limited_expansion(m: &BigInt, n: &BigInt) -> Result<EcfExpansion, CliError> {
    ecf_expand_limited(m.clone(), n.clone(), MAX_QUOTIENTS)
        .map_err(|e| match e {
            Error::ZeroVector => CliError::usage("(m, n) must not be (0, 0)"),
            other => other.into(),
        })?
        .ok_or_else(|| CliError::limit(format!("expansion exceeds the limit of {MAX_QUOTIENTS} quotients")))
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Io,
    Usage,
    NotEssential,
    VerifyFailed,
    ResourceLimit,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Io => 1,
            Status::Usage => 2,
            Status::NotEssential => 3,
            Status::VerifyFailed => 4,
            Status::ResourceLimit => 5,
        }
    }
}

/// A finished command: what to print and how to exit.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub record: OutputRecord,
    pub text: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            status: Status::Usage,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> Self {
        CliError {
            status: Status::ResourceLimit,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotEssential { .. } | Error::NotCoprime { .. } => Status::NotEssential,
            _ => Status::Usage,
        };
        CliError {
            status,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

fn pair(x: &BigInt, y: &BigInt) -> [Int; 2] {
    [x.into(), y.into()]
}

fn ok(record: OutputRecord, text: String) -> CmdResult {
    Ok(Outcome {
        record,
        text,
        status: Status::Ok,
    })
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key:<13}{value}").unwrap();
}

fn dynnikov(a: BigInt, b: BigInt) -> Result<DynnikovCoord, CliError> {
    DynnikovCoord::new(a, b).map_err(|_| CliError::usage("(a, b) must not be (0, 0)"))
}

/// Everything known about a curve, or its multicurve decomposition.
fn describe(command: &str, a: BigInt, b: BigInt) -> Result<(Outcome, Option<Untwisting>), CliError> {
    let d = dynnikov(a, b)?;
    let mut r = OutputRecord::new(command);
    r.input = Some(pair(d.a(), d.b()));
    r.dynnikov = Some((&d).into());
    let lift = phi_inverse(&d);
    r.torus = Some((&lift).into());
    let kind = curve_kind(&d);
    r.multiplicity = Some(kind.multiplicity.clone().into());
    let mut text = String::new();
    line(&mut text, "input", &d);

    if kind.kind == Kind::Multicurve {
        r.kind = Some("multicurve".into());
        r.primitive = Some((&kind.primitive).into());
        line(&mut text, "kind", "multicurve");
        line(&mut text, "multiplicity", &kind.multiplicity);
        line(&mut text, "primitive", &kind.primitive);
        line(&mut text, "torus", &lift);
        let out = Outcome {
            record: r,
            text,
            status: Status::NotEssential,
        };
        return Ok((out, None));
    }

    let class = classify_curve(&d)?;
    let ecf = limited_expansion(lift.p(), lift.q())?;
    let length = ecf.length();
    if length > BigInt::from(MAX_WORD_LENGTH) {
        return Err(CliError::limit(format!(
            "untwisting word has {length} letters, more than the limit of {MAX_WORD_LENGTH}"
        )));
    }
    let u = untwist(&d)?;
    debug_assert_eq!(length, conjugation_length(&d)?);
    r.kind = Some("essential".into());
    r.class = Some(class.as_str().into());
    r.length = Some(length.clone().into());
    r.word = Some(u.word.letters().iter().map(|g| g.as_str().to_string()).collect());
    r.path = Some(u.path.iter().map(Ab::from).collect());
    r.terminal = Some((&u.terminal).into());
    r.ecf = Some((&ecf).into());

    line(&mut text, "kind", "essential");
    line(&mut text, "class", class);
    line(&mut text, "length", &length);
    line(&mut text, "word", if u.word.is_empty() { "(empty)".to_string() } else { u.word.to_string() });
    let path: Vec<String> = u.path.iter().map(|p| p.to_string()).collect();
    line(&mut text, "path", path.join(" -> "));
    line(&mut text, "terminal", &u.terminal);
    line(&mut text, "torus", &lift);
    line(&mut text, "ecf", &ecf);
    Ok((ok(r, text)?, Some(u)))
}

pub fn classify(a: BigInt, b: BigInt) -> CmdResult {
    describe("classify", a, b).map(|(out, _)| out)
}

/// Same record as `classify`; the text lists one twist per line.
pub fn untwist_cmd(a: BigInt, b: BigInt) -> CmdResult {
    let (mut out, u) = describe("untwist", a, b)?;
    let Some(u) = u else { return Ok(out) };
    let mut text = String::new();
    for (i, g) in u.word.letters().iter().enumerate() {
        writeln!(text, "{} -[{}]-> {}", u.path[i], g, u.path[i + 1]).unwrap();
    }
    let class = out.record.class.clone().unwrap_or_default();
    writeln!(text, "reached {} (class {class}) in {} steps", u.terminal, u.word.len()).unwrap();
    out.text = text;
    Ok(out)
}

pub fn ecf(m: BigInt, n: BigInt) -> CmdResult {
    let mut r = OutputRecord::new("ecf");
    r.input = Some(pair(&m, &n));
    let e = limited_expansion(&m, &n)?;
    r.torus = Some((&TorusCoord::new(m.clone(), n.clone())?).into());
    r.length = Some(e.length().into());
    r.ecf = Some((&e).into());
    let mut text = String::new();
    line(&mut text, "input", format!("{m}/{n}"));
    line(&mut text, "expansion", &e);
    line(&mut text, "trailing one", if e.trailing_one { "yes" } else { "no" });
    line(&mut text, "epsilon", e.epsilon);
    line(&mut text, "terminal", &e.terminal);
    line(&mut text, "length", e.length());
    ok(r, text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Pq2ab,
    Ab2pq,
}

pub fn transform(direction: Direction, x: BigInt, y: BigInt) -> CmdResult {
    let mut r = OutputRecord::new("transform");
    r.input = Some(pair(&x, &y));
    let (d, t, text) = match direction {
        Direction::Pq2ab => {
            let t = TorusCoord::new(x, y).map_err(|_| CliError::usage("(p, q) must not be (0, 0)"))?;
            let d = phi(&t);
            let text = format!("{t} -> {d}\n");
            (d, t, text)
        }
        Direction::Ab2pq => {
            let d = dynnikov(x, y)?;
            let t = phi_inverse(&d);
            let text = format!("{d} -> ±{t}\n");
            (d, t, text)
        }
    };
    r.dynnikov = Some((&d).into());
    r.torus = Some((&t).into());
    ok(r, text)
}

/// Points of `O^family_n` with both coordinates in `[-window, window]`.
pub fn track(family: Family, n: u64, window: u64, lift: bool) -> CmdResult {
    if n < 1 {
        return Err(CliError::usage("track index must be at least 1"));
    }
    if window < n {
        return Err(CliError::usage("window must be at least the track index"));
    }
    if window > 1_000_000 {
        return Err(CliError::limit("window exceeds 1000000"));
    }
    let t = Track::new(family, n)?;
    let points = t.points(&BigInt::from(window));
    let mut r = OutputRecord::new("track");
    r.input = Some([Int::from(n as i64), Int::from(window as i64)]);
    let rows: Vec<[Int; 2]> = if lift {
        points.iter().map(|p| {
            let l = phi_inverse(p);
            pair(l.p(), l.q())
        }).collect()
    } else {
        points.iter().map(|p| pair(p.a(), p.b())).collect()
    };
    let text = crate::render::csv(if lift { "p,q" } else { "a,b" }, &rows);
    r.points = Some(rows);
    ok(r, text)
}

/// Exact graph distance to the reference curves, next to the closed form.
pub fn distance(a: BigInt, b: BigInt) -> CmdResult {
    let d = dynnikov(a, b)?;
    let kind = curve_kind(&d);
    if !kind.is_essential() {
        return Err(Error::NotEssential {
            a: d.a().clone(),
            b: d.b().clone(),
            multiplicity: kind.multiplicity,
        }
        .into());
    }
    let norm: BigInt = d.a().abs() + d.b().abs();
    let bound = u64::try_from(&norm)
        .ok()
        .filter(|&n| n <= MAX_DISTANCE_NORM)
        .ok_or_else(|| CliError::limit(format!("|a| + |b| = {norm} exceeds {MAX_DISTANCE_NORM}")))?;
    let map = bounded_distances::<DynnikovPlane>(bound)?;
    let graph = map.get(&d).expect("every essential curve reaches a reference curve");
    let length = conjugation_length(&d)?;
    let steps = untwist(&d)?.word.len();

    let mut r = OutputRecord::new("distance");
    r.input = Some(pair(d.a(), d.b()));
    r.dynnikov = Some((&d).into());
    r.length = Some(length.clone().into());
    r.distance = Some(DistanceRecord {
        graph,
        explored: map.len(),
    });
    let mut text = String::new();
    line(&mut text, "input", &d);
    line(&mut text, "graph", graph);
    line(&mut text, "formula", &length);
    line(&mut text, "untwisting", steps);
    line(&mut text, "explored", map.len());
    let agree = BigInt::from(graph) == length && steps == graph as usize;
    Ok(Outcome {
        record: r,
        text,
        status: if agree { Status::Ok } else { Status::VerifyFailed },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneArg {
    Dynnikov,
    Torus,
}

pub fn graph(plane: PlaneArg, depth: u32) -> CmdResult {
    if depth > MAX_GRAPH_DEPTH {
        return Err(CliError::limit(format!("depth {depth} exceeds {MAX_GRAPH_DEPTH}")));
    }
    let g = match plane {
        PlaneArg::Dynnikov => {
            let ball = cayley_ball(&CayleySpec::<DynnikovPlane>::from_terminals(depth))?;
            GraphRecord {
                plane: "dynnikov".into(),
                depth,
                vertices: ball
                    .distances
                    .sorted()
                    .into_iter()
                    .map(|(v, distance)| GraphVertex {
                        coords: pair(v.a(), v.b()),
                        distance,
                        orbit: classify_curve(&v).expect("essential").as_str().into(),
                    })
                    .collect(),
                edges: ball
                    .edges
                    .iter()
                    .map(|(u, v, name)| GraphEdge {
                        from: pair(u.a(), u.b()),
                        to: pair(v.a(), v.b()),
                        label: name.to_string(),
                    })
                    .collect(),
            }
        }
        PlaneArg::Torus => {
            let ball = cayley_ball(&CayleySpec::<TorusPlane>::from_terminals(depth))?;
            GraphRecord {
                plane: "torus".into(),
                depth,
                vertices: ball
                    .distances
                    .sorted()
                    .into_iter()
                    .map(|(v, distance)| GraphVertex {
                        coords: pair(v.p(), v.q()),
                        distance,
                        orbit: TorusOrbit::of(&v).expect("primitive").as_str().into(),
                    })
                    .collect(),
                edges: ball
                    .edges
                    .iter()
                    .map(|(u, v, name)| GraphEdge {
                        from: pair(u.p(), u.q()),
                        to: pair(v.p(), v.q()),
                        label: name.to_string(),
                    })
                    .collect(),
            }
        }
    };
    let text = crate::render::dot(&g);
    let mut r = OutputRecord::new("graph");
    r.graph = Some(g);
    ok(r, text)
}

pub fn verify_cmd(bound: u64, depth: u32, inject_fault: bool) -> CmdResult {
    let mut cfg = VerifyConfig::new(bound, depth);
    if inject_fault {
        cfg.twist = verify::faulty_twist;
    }
    let report = verify::run(&cfg).map_err(|e| match e {
        VerifyError::BoundTooSmall => CliError::usage("--bound must be at least 1"),
        VerifyError::DepthTooSmall => CliError::usage("--depth must be at least 1"),
        VerifyError::ResourceLimit(m) => CliError::limit(m),
    })?;
    let mut text = String::new();
    for c in &report.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{mark}  {:<16} checked {:<9} {}", c.name, c.checked, c.detail).unwrap();
        if let Some(ce) = &c.counterexample {
            writeln!(text, "      counterexample: {ce}").unwrap();
        }
    }
    let status = if report.passed { Status::Ok } else { Status::VerifyFailed };
    writeln!(text, "{}", if report.passed { "all checks passed" } else { "verification FAILED" }).unwrap();
    let mut r = OutputRecord::new("verify");
    r.verify = Some(report);
    Ok(Outcome { record: r, text, status })
}
