//! Brute-force Cayley-graph searches, used as ground truth for the
//! closed-form results elsewhere in the crate.
//!
//! Two actions are covered: the twists `t_c^{±1}`, `t_d^{±1}` on essential
//! curves in the Dynnikov plane, and `U^{±2}`, `L^{±2}` on primitive vectors
//! of the torus plane. Vertices are joined when a generator moves one to the
//! other; fixed points give no loop edges.
//!
//! Nothing in this module calls the untwisting algorithm or the continued
//! fraction code.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rustc_hash::{FxHashMap, FxHashSet};

use crate::actions::{apply_twist, Generator};
use crate::coords::{curve_kind, phi, DynnikovCoord, TorusCoord};
use crate::error::{Error, Result};
use crate::untwist::{classify, CurveClass};

/// A group action with a finite symmetric generating set.
pub trait CayleyAction {
    type Vertex: Clone + Eq + Hash + Ord + fmt::Debug;
    type Label: Copy + Eq + fmt::Debug + 'static;

    fn labels() -> &'static [Self::Label];
    fn act(label: Self::Label, v: &Self::Vertex) -> Self::Vertex;
    fn inverse(label: Self::Label) -> Self::Label;
    /// Undirected edge name, shared by a generator and its inverse.
    fn edge_name(label: Self::Label) -> &'static str;
    fn validate(v: &Self::Vertex) -> Result<()>;
    /// The reference vertices distances are measured to.
    fn terminals() -> Vec<Self::Vertex>;
    /// Size used to bound searches. Away from the terminals at most one
    /// neighbour of a vertex is no larger than the vertex itself.
    fn norm(v: &Self::Vertex) -> BigInt;

    /// Neighbours of `v`, skipping generators that fix it.
    fn neighbors(v: &Self::Vertex) -> Vec<(Self::Label, Self::Vertex)> {
        Self::labels()
            .iter()
            .map(|&l| (l, Self::act(l, v)))
            .filter(|(_, w)| w != v)
            .collect()
    }
}

/// Twists acting on essential curves.
#[derive(Debug, Clone, Copy, Default)]
pub struct DynnikovPlane;

impl CayleyAction for DynnikovPlane {
    type Vertex = DynnikovCoord;
    type Label = Generator;

    fn labels() -> &'static [Generator] {
        &Generator::ALL
    }

    fn act(label: Generator, v: &DynnikovCoord) -> DynnikovCoord {
        apply_twist(label, v)
    }

    fn inverse(label: Generator) -> Generator {
        label.inverse()
    }

    fn edge_name(label: Generator) -> &'static str {
        match label {
            Generator::Tc | Generator::TcInv => "tc",
            Generator::Td | Generator::TdInv => "td",
        }
    }

    fn validate(v: &DynnikovCoord) -> Result<()> {
        if curve_kind(v).is_essential() {
            Ok(())
        } else {
            Err(Error::InvalidSeed(format!("{v:?} is not an essential curve")))
        }
    }

    fn terminals() -> Vec<DynnikovCoord> {
        CurveClass::ALL.iter().map(|c| c.coord()).collect()
    }

    /// `|a| + |b|`, the max norm of the torus lift.
    fn norm(v: &DynnikovCoord) -> BigInt {
        v.a().abs() + v.b().abs()
    }
}

/// Generators `U^{±2}`, `L^{±2}` of the level-2 subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transvection {
    U2,
    U2Inv,
    L2,
    L2Inv,
}

impl Transvection {
    pub const ALL: [Transvection; 4] = [
        Transvection::U2,
        Transvection::U2Inv,
        Transvection::L2,
        Transvection::L2Inv,
    ];
}

/// `U^{±2}`, `L^{±2}` acting on primitive vectors.
#[derive(Debug, Clone, Copy, Default)]
pub struct TorusPlane;

impl CayleyAction for TorusPlane {
    type Vertex = TorusCoord;
    type Label = Transvection;

    fn labels() -> &'static [Transvection] {
        &Transvection::ALL
    }

    fn act(label: Transvection, v: &TorusCoord) -> TorusCoord {
        let (p, q) = (v.p(), v.q());
        let (x, y) = match label {
            Transvection::U2 => (p + q * 2, q.clone()),
            Transvection::U2Inv => (p - q * 2, q.clone()),
            Transvection::L2 => (p.clone(), q + p * 2),
            Transvection::L2Inv => (p.clone(), q - p * 2),
        };
        TorusCoord::new_unchecked(x, y)
    }

    fn inverse(label: Transvection) -> Transvection {
        match label {
            Transvection::U2 => Transvection::U2Inv,
            Transvection::U2Inv => Transvection::U2,
            Transvection::L2 => Transvection::L2Inv,
            Transvection::L2Inv => Transvection::L2,
        }
    }

    fn edge_name(label: Transvection) -> &'static str {
        match label {
            Transvection::U2 | Transvection::U2Inv => "U2",
            Transvection::L2 | Transvection::L2Inv => "L2",
        }
    }

    fn validate(v: &TorusCoord) -> Result<()> {
        if v.is_primitive() {
            Ok(())
        } else {
            Err(Error::InvalidSeed(format!("{v:?} is not primitive")))
        }
    }

    /// The six lifts `±(1, 0)`, `±(0, 1)`, `±(1, 1)` of `c`, `d`, `e`.
    fn terminals() -> Vec<TorusCoord> {
        [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
            .into_iter()
            .map(|(p, q)| TorusCoord::new_unchecked(BigInt::from(p), BigInt::from(q)))
            .collect()
    }

    fn norm(v: &TorusCoord) -> BigInt {
        v.max_norm()
    }
}

/// Which of the two planes a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Plane {
    Dynnikov,
    Torus,
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Plane::Dynnikov => "dynnikov",
            Plane::Torus => "torus",
        })
    }
}

/// A BFS request: seeds and the maximal depth to explore.
#[derive(Debug, Clone)]
pub struct CayleySpec<A: CayleyAction> {
    pub seeds: Vec<A::Vertex>,
    pub depth_limit: u32,
}

impl<A: CayleyAction> CayleySpec<A> {
    pub fn new(seeds: Vec<A::Vertex>, depth_limit: u32) -> Self {
        Self { seeds, depth_limit }
    }

    /// Seeds at the action's reference vertices.
    pub fn from_terminals(depth_limit: u32) -> Self {
        Self::new(A::terminals(), depth_limit)
    }

    fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::EmptySeeds);
        }
        self.seeds.iter().try_for_each(A::validate)
    }
}

/// Graph distance from the seed set, for every vertex within the depth limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap<V: Eq + Hash> {
    dist: FxHashMap<V, u32>,
    depth_limit: u32,
}

impl<V: Eq + Hash + Clone + Ord> DistanceMap<V> {
    pub fn get(&self, v: &V) -> Option<u32> {
        self.dist.get(v).copied()
    }

    pub fn contains(&self, v: &V) -> bool {
        self.dist.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn depth_limit(&self) -> u32 {
        self.depth_limit
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, u32)> {
        self.dist.iter().map(|(v, &d)| (v, d))
    }

    /// Number of vertices at each distance `0..=depth_limit`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.depth_limit as usize + 1];
        for &d in self.dist.values() {
            sizes[d as usize] += 1;
        }
        sizes
    }

    /// Vertices sorted by `(distance, vertex)`.
    pub fn sorted(&self) -> Vec<(V, u32)> {
        let mut out: Vec<_> = self.dist.iter().map(|(v, &d)| (v.clone(), d)).collect();
        out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
        out
    }
}

/// Level-synchronous BFS from the seeds.
///
/// A frontier is expanded completely before the next begins, so the result
/// does not depend on iteration order.
pub fn bfs_distances<A: CayleyAction>(spec: &CayleySpec<A>) -> Result<DistanceMap<A::Vertex>> {
    spec.validate()?;
    Ok(bfs_unchecked::<A>(&spec.seeds, spec.depth_limit))
}

fn bfs_unchecked<A: CayleyAction>(seeds: &[A::Vertex], depth_limit: u32) -> DistanceMap<A::Vertex> {
    bfs_within::<A>(seeds, depth_limit, |_| true)
}

fn bfs_within<A: CayleyAction>(
    seeds: &[A::Vertex],
    depth_limit: u32,
    keep: impl Fn(&A::Vertex) -> bool,
) -> DistanceMap<A::Vertex> {
    let mut dist: FxHashMap<A::Vertex, u32> = FxHashMap::default();
    let mut frontier = Vec::new();
    for s in seeds {
        if dist.insert(s.clone(), 0).is_none() {
            frontier.push(s.clone());
        }
    }
    for depth in 1..=depth_limit {
        let mut next = Vec::new();
        for v in &frontier {
            for (_, w) in A::neighbors(v) {
                if !dist.contains_key(&w) && keep(&w) {
                    dist.insert(w.clone(), depth);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    DistanceMap { dist, depth_limit }
}

/// Distances to the terminals for every vertex of norm at most `bound`,
/// searching only through such vertices.
///
/// Along a geodesic to the terminals the largest norm cannot sit at an
/// interior vertex, since that vertex would have two distinct neighbours no
/// larger than itself, unless it is no larger than a terminal. So geodesics
/// from the region stay inside it, and the distances are exact when
/// [`descent_violations`] finds nothing anywhere in the plane.
pub fn bounded_distances<A: CayleyAction>(bound: u64) -> Result<DistanceMap<A::Vertex>> {
    let bound = BigInt::from(check_bound(bound)?);
    let mut map = bfs_within::<A>(&A::terminals(), u32::MAX, |w| A::norm(w) <= bound);
    map.depth_limit = map.dist.values().copied().max().unwrap_or(0);
    Ok(map)
}

/// Vertices larger than every terminal with two or more distinct neighbours
/// of norm at most their own.
pub fn descent_violations<'a, A: CayleyAction>(
    vertices: impl IntoIterator<Item = &'a A::Vertex>,
) -> Vec<A::Vertex>
where
    A::Vertex: 'a,
{
    let floor = A::terminals().iter().map(A::norm).max().unwrap_or_default();
    vertices
        .into_iter()
        .filter(|v| {
            let n = A::norm(v);
            if n <= floor {
                return false;
            }
            let low: BTreeSet<A::Vertex> = A::neighbors(v)
                .into_iter()
                .map(|(_, w)| w)
                .filter(|w| A::norm(w) <= n)
                .collect();
            low.len() > 1
        })
        .cloned()
        .collect()
}

/// Exact distances to the terminals up to a combined radius, by meeting a
/// terminal ball of radius `R` with a ball of radius `r` around each query.
///
/// If `dist(v) <= R + r` some geodesic vertex lies in both balls, so the
/// minimum of `local + terminal` over the overlap is exact; otherwise every
/// candidate exceeds `R + r` and the distance is reported as unknown.
pub struct DistanceOracle<A: CayleyAction> {
    ball: DistanceMap<A::Vertex>,
    query_radius: u32,
}

impl<A: CayleyAction> DistanceOracle<A> {
    /// Oracle exact for all distances up to `max_distance`.
    pub fn new(max_distance: u32) -> Self {
        let terminal_radius = max_distance.div_ceil(2);
        Self {
            ball: bfs_unchecked::<A>(&A::terminals(), terminal_radius),
            query_radius: max_distance - terminal_radius,
        }
    }

    pub fn max_distance(&self) -> u32 {
        self.ball.depth_limit() + self.query_radius
    }

    pub fn distance(&self, v: &A::Vertex) -> Option<u32> {
        if let Some(d) = self.ball.get(v) {
            return Some(d);
        }
        let mut best: Option<u32> = None;
        let mut seen: FxHashSet<A::Vertex> = FxHashSet::default();
        seen.insert(v.clone());
        let mut frontier = vec![v.clone()];
        for local in 1..=self.query_radius {
            let mut next = Vec::new();
            for u in &frontier {
                for (_, w) in A::neighbors(u) {
                    if seen.insert(w.clone()) {
                        if let Some(d) = self.ball.get(&w) {
                            let total = local + d;
                            best = Some(best.map_or(total, |b| b.min(total)));
                        }
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        best.filter(|&d| d <= self.max_distance())
    }
}

/// The explored ball with its edges, for cycle search and graph export.
#[derive(Debug, Clone)]
pub struct CayleyBall<A: CayleyAction> {
    pub distances: DistanceMap<A::Vertex>,
    /// Undirected edges `(u, v, name)` with `u < v`, sorted. Two vertices
    /// joined by differently named generators get one edge per name.
    pub edges: Vec<(A::Vertex, A::Vertex, &'static str)>,
}

pub fn cayley_ball<A: CayleyAction>(spec: &CayleySpec<A>) -> Result<CayleyBall<A>> {
    let distances = bfs_distances(spec)?;
    let mut edges = BTreeSet::new();
    for (v, _) in distances.iter() {
        for (l, w) in A::neighbors(v) {
            if distances.contains(&w) {
                let (u, w) = if *v < w { (v.clone(), w) } else { (w, v.clone()) };
                edges.insert((u, w, A::edge_name(l)));
            }
        }
    }
    Ok(CayleyBall {
        distances,
        edges: edges.into_iter().collect(),
    })
}

/// All simple cycles (no repeated vertex or edge) in the ball of radius
/// `depth_limit` around `seed`, each listed from its least vertex.
///
/// Leaves are pruned first; what remains (the 2-core) carries every cycle
/// and is searched exhaustively.
pub fn find_simple_cycles<A: CayleyAction>(
    seed: &A::Vertex,
    depth_limit: u32,
) -> Result<Vec<Vec<A::Vertex>>> {
    let ball = cayley_ball(&CayleySpec::<A>::new(vec![seed.clone()], depth_limit))?;
    let mut adj: BTreeMap<A::Vertex, Vec<(A::Vertex, usize)>> = BTreeMap::new();
    for (id, (u, v, _)) in ball.edges.iter().enumerate() {
        adj.entry(u.clone()).or_default().push((v.clone(), id));
        adj.entry(v.clone()).or_default().push((u.clone(), id));
    }

    let mut queue: VecDeque<A::Vertex> =
        adj.iter().filter(|(_, n)| n.len() <= 1).map(|(v, _)| v.clone()).collect();
    while let Some(v) = queue.pop_front() {
        let Some(nbrs) = adj.remove(&v) else { continue };
        for (w, id) in nbrs {
            if let Some(wn) = adj.get_mut(&w) {
                wn.retain(|&(_, e)| e != id);
                if wn.len() <= 1 {
                    queue.push_back(w);
                }
            }
        }
    }

    let mut found: BTreeMap<BTreeSet<usize>, Vec<A::Vertex>> = BTreeMap::new();
    for start in adj.keys() {
        let mut path = vec![start.clone()];
        let mut used = Vec::new();
        extend_cycles::<A>(&adj, start, &mut path, &mut used, &mut found);
    }
    Ok(found.into_values().collect())
}

fn extend_cycles<A: CayleyAction>(
    adj: &BTreeMap<A::Vertex, Vec<(A::Vertex, usize)>>,
    start: &A::Vertex,
    path: &mut Vec<A::Vertex>,
    used: &mut Vec<usize>,
    out: &mut BTreeMap<BTreeSet<usize>, Vec<A::Vertex>>,
) {
    let last = path.last().expect("path is never empty").clone();
    for (w, id) in &adj[&last] {
        if used.contains(id) {
            continue;
        }
        if w == start {
            let mut edges: BTreeSet<usize> = used.iter().copied().collect();
            edges.insert(*id);
            out.entry(edges).or_insert_with(|| path.clone());
        } else if w > start && !path.contains(w) {
            path.push(w.clone());
            used.push(*id);
            extend_cycles::<A>(adj, start, path, used, out);
            used.pop();
            path.pop();
        }
    }
}

/// The five orbits of the level-2 subgroup on primitive vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusOrbit {
    /// `p` even, `q ≡ 1 (mod 4)`.
    PEvenQ1,
    /// `p` even, `q ≡ 3 (mod 4)`.
    PEvenQ3,
    /// `q` even, `p ≡ 1 (mod 4)`.
    QEvenP1,
    /// `q` even, `p ≡ 3 (mod 4)`.
    QEvenP3,
    BothOdd,
}

impl TorusOrbit {
    pub const ALL: [TorusOrbit; 5] = [
        TorusOrbit::PEvenQ1,
        TorusOrbit::PEvenQ3,
        TorusOrbit::QEvenP1,
        TorusOrbit::QEvenP3,
        TorusOrbit::BothOdd,
    ];

    /// Orbit of a primitive vector by parity and residues mod 4.
    pub fn of(v: &TorusCoord) -> Option<Self> {
        if !v.is_primitive() {
            return None;
        }
        let four = BigInt::from(4);
        let one = |x: &BigInt| x.mod_floor(&four).is_one();
        Some(match (v.p().is_even(), v.q().is_even()) {
            (true, _) if one(v.q()) => TorusOrbit::PEvenQ1,
            (true, _) => TorusOrbit::PEvenQ3,
            (_, true) if one(v.p()) => TorusOrbit::QEvenP1,
            (_, true) => TorusOrbit::QEvenP3,
            _ => TorusOrbit::BothOdd,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TorusOrbit::PEvenQ1 => "p even, q = 1 mod 4",
            TorusOrbit::PEvenQ3 => "p even, q = 3 mod 4",
            TorusOrbit::QEvenP1 => "q even, p = 1 mod 4",
            TorusOrbit::QEvenP3 => "q even, p = 3 mod 4",
            TorusOrbit::BothOdd => "p, q odd",
        }
    }
}

impl fmt::Display for TorusOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Flood fill from each terminal inside the box `|x|, |y| <= working`.
/// Returns component ids per vertex and, per component, its terminals.
/// Component id of every reached vertex, and the terminals of each component.
type Components<V> = (FxHashMap<V, usize>, Vec<Vec<V>>);

fn box_components<A, F>(working: &BigInt, in_box: F) -> Components<A::Vertex>
where
    A: CayleyAction,
    F: Fn(&A::Vertex, &BigInt) -> bool,
{
    let mut comp: FxHashMap<A::Vertex, usize> = FxHashMap::default();
    let mut members: Vec<Vec<A::Vertex>> = Vec::new();
    for seed in A::terminals() {
        if let Some(&id) = comp.get(&seed) {
            members[id].push(seed);
            continue;
        }
        let id = members.len();
        members.push(vec![seed.clone()]);
        comp.insert(seed.clone(), id);
        let mut stack = vec![seed];
        while let Some(v) = stack.pop() {
            for (_, w) in A::neighbors(&v) {
                if in_box(&w, working) && !comp.contains_key(&w) {
                    comp.insert(w.clone(), id);
                    stack.push(w);
                }
            }
        }
    }
    (comp, members)
}

/// Partition of the vertices in a box into Cayley-graph components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census<L: Ord> {
    pub plane: Plane,
    pub bound: u64,
    /// Vertices examined: essential curves or primitive vectors in the box.
    pub vertices: usize,
    /// Per component: the terminals it contains and its vertex count.
    pub components: Vec<ComponentCount<L>>,
    /// Vertices not connected to any terminal inside the working box.
    pub unresolved: usize,
    /// Vertices whose closed-form label disagrees with their component's.
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCount<L> {
    pub terminals: Vec<String>,
    pub label: Option<L>,
    pub count: usize,
}

impl<L: Ord> Census<L> {
    /// Number of distinct components met by the box.
    pub fn orbit_count(&self) -> usize {
        self.components.iter().filter(|c| c.count > 0).count()
    }

    pub fn is_consistent(&self) -> bool {
        self.unresolved == 0 && self.mismatches.is_empty()
    }
}

fn census<A, L, F, G>(plane: Plane, bound: u64, vertices: Vec<A::Vertex>, in_box: F, label: G) -> Census<L>
where
    A: CayleyAction,
    L: Ord + Copy + fmt::Debug,
    F: Fn(&A::Vertex, &BigInt) -> bool,
    G: Fn(&A::Vertex) -> L,
{
    let working = BigInt::from(bound) * 2;
    let (comp, members) = box_components::<A, F>(&working, in_box);
    let mut components: Vec<ComponentCount<L>> = members
        .iter()
        .map(|m| ComponentCount {
            terminals: m.iter().map(|v| format!("{v:?}")).collect(),
            label: Some(label(&m[0])),
            count: 0,
        })
        .collect();
    let mut unresolved = 0;
    let mut mismatches = Vec::new();
    for v in &vertices {
        let Some(&id) = comp.get(v) else {
            unresolved += 1;
            continue;
        };
        components[id].count += 1;
        let l = label(v);
        if components[id].label != Some(l) {
            mismatches.push(format!("{v:?}: label {l:?} in component of {:?}", components[id].terminals));
        }
    }
    for v in comp.keys() {
        let l = label(v);
        for (g, w) in A::neighbors(v) {
            if label(&w) != l {
                mismatches.push(format!("label changes along {g:?} from {v:?}"));
            }
        }
    }
    // distinct components must carry distinct labels
    let labels: BTreeSet<_> = components.iter().filter_map(|c| c.label).collect();
    if labels.len() != components.len() {
        mismatches.push("two components share a label".to_string());
    }
    Census {
        plane,
        bound,
        vertices: vertices.len(),
        components,
        unresolved,
        mismatches,
    }
}

fn check_bound(bound: u64) -> Result<i64> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    i64::try_from(bound).map_err(|_| Error::InvalidBound)
}

/// Components of the twist action on essential curves with
/// `|a|, |b| <= bound`, checked against [`classify`].
pub fn dynnikov_census(bound: u64) -> Result<Census<CurveClass>> {
    let n = check_bound(bound)?;
    let vertices: Vec<DynnikovCoord> = (-n..=n)
        .flat_map(|a| (-n..=n).filter_map(move |b| DynnikovCoord::new(a, b).ok()))
        .filter(|d| curve_kind(d).is_essential())
        .collect();
    Ok(census::<DynnikovPlane, _, _, _>(
        Plane::Dynnikov,
        bound,
        vertices,
        |v, w| v.max_norm() <= *w,
        |v| classify(v).expect("vertices are essential"),
    ))
}

/// Components of the level-2 action on primitive vectors with
/// `|p|, |q| <= bound`, checked against [`TorusOrbit::of`].
pub fn torus_census(bound: u64) -> Result<Census<TorusOrbit>> {
    let n = check_bound(bound)?;
    let vertices: Vec<TorusCoord> = (-n..=n)
        .flat_map(|p| (-n..=n).filter_map(move |q| TorusCoord::new(p, q).ok()))
        .filter(TorusCoord::is_primitive)
        .collect();
    Ok(census::<TorusPlane, _, _, _>(
        Plane::Torus,
        bound,
        vertices,
        |v, w| v.max_norm() <= *w,
        |v| TorusOrbit::of(v).expect("vertices are primitive"),
    ))
}

/// Comparison of the torus graph with the Dynnikov graph under `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringReport {
    pub bound: u64,
    /// Radius up to which distances are also confirmed by unrestricted search.
    pub max_distance: u32,
    /// Primitive vectors compared.
    pub checked: usize,
    /// Of those, the ones also confirmed by unrestricted search.
    pub confirmed: usize,
    /// Largest distance seen.
    pub deepest: u32,
    /// `(v, torus distance, Dynnikov distance)` disagreements.
    pub mismatches: Vec<(TorusCoord, Option<u32>, Option<u32>)>,
    /// Vectors whose image collides with a non-antipodal vector, or whose
    /// antipode has a different image.
    pub fibre_violations: Vec<TorusCoord>,
    /// Explored vertices breaking the descent property, in either plane.
    pub descent_violations: usize,
    /// Dynnikov classes reached from each torus orbit.
    pub component_map: BTreeMap<TorusOrbit, BTreeSet<CurveClass>>,
}

impl CoveringReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
            && self.fibre_violations.is_empty()
            && self.descent_violations == 0
            && self.component_map.values().all(|s| s.len() == 1)
    }
}

/// Checks that `phi` maps the torus Cayley graph two-to-one onto the
/// Dynnikov one, distance-preservingly, for primitive `|p|, |q| <= bound`.
///
/// Distances come from [`bounded_distances`] in both planes. Those at most
/// `max_distance` are confirmed again by a [`DistanceOracle`].
pub fn check_covering(bound: u64, max_distance: u32) -> Result<CoveringReport> {
    let n = check_bound(bound)?;
    let torus = bounded_distances::<TorusPlane>(bound)?;
    let dynnikov = bounded_distances::<DynnikovPlane>(bound)?;
    let descent = descent_violations::<TorusPlane>(torus.dist.keys()).len()
        + descent_violations::<DynnikovPlane>(dynnikov.dist.keys()).len();
    let torus_ball = DistanceOracle::<TorusPlane>::new(max_distance);
    let dynnikov_ball = DistanceOracle::<DynnikovPlane>::new(max_distance);

    let mut report = CoveringReport {
        bound,
        max_distance,
        checked: 0,
        confirmed: 0,
        deepest: 0,
        mismatches: Vec::new(),
        fibre_violations: Vec::new(),
        descent_violations: descent,
        component_map: BTreeMap::new(),
    };
    let mut fibres: FxHashMap<DynnikovCoord, TorusCoord> = FxHashMap::default();
    for p in -n..=n {
        for q in -n..=n {
            let Ok(v) = TorusCoord::new(p, q) else { continue };
            if !v.is_primitive() {
                continue;
            }
            let image = phi(&v);
            if phi(&-&v) != image {
                report.fibre_violations.push(v.clone());
            }
            match fibres.get(&image) {
                Some(u) if !u.same_curve(&v) => report.fibre_violations.push(v.clone()),
                Some(_) => {}
                None => {
                    fibres.insert(image.clone(), v.clone());
                }
            }

            let orbit = TorusOrbit::of(&v).expect("primitive");
            let class = classify(&image).expect("image of a primitive vector is essential");
            report.component_map.entry(orbit).or_default().insert(class);

            let (x, y) = (torus.get(&v), dynnikov.get(&image));
            let Some(d) = x.filter(|_| x == y) else {
                report.mismatches.push((v, x, y));
                continue;
            };
            report.checked += 1;
            report.deepest = report.deepest.max(d);
            if d <= max_distance {
                let (bx, by) = (torus_ball.distance(&v), dynnikov_ball.distance(&image));
                if bx != Some(d) || by != Some(d) {
                    report.mismatches.push((v, bx, by));
                    continue;
                }
                report.confirmed += 1;
            }
        }
    }
    Ok(report)
}

/// Closed-form Dynnikov class each torus orbit projects to.
pub fn projected_class(orbit: TorusOrbit) -> CurveClass {
    match orbit {
        TorusOrbit::QEvenP1 | TorusOrbit::QEvenP3 => CurveClass::C,
        TorusOrbit::PEvenQ1 | TorusOrbit::PEvenQ3 => CurveClass::D,
        TorusOrbit::BothOdd => CurveClass::E,
    }
}

/// True when every vertex of the map is the seed of a valid edge pairing:
/// `w = g(v)` iff `v = g^-1(w)`.
pub fn edges_are_symmetric<A: CayleyAction>(map: &DistanceMap<A::Vertex>) -> bool {
    map.iter().all(|(v, _)| {
        A::labels().iter().all(|&l| {
            let w = A::act(l, v);
            A::act(A::inverse(l), &w) == *v
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(a: i64, b: i64) -> DynnikovCoord {
        DynnikovCoord::new(a, b).unwrap()
    }

    fn tc(p: i64, q: i64) -> TorusCoord {
        TorusCoord::new(p, q).unwrap()
    }

    #[test]
    fn bfs_examples() {
        let map = bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(5)).unwrap();
        assert_eq!(map.get(&dc(10, 3)), Some(5));
        assert_eq!(map.get(&dc(0, 1)), Some(0));
        assert_eq!(map.get(&dc(1, 0)), Some(1));
        assert_eq!(map.get(&dc(3, 10)), Some(4));
        assert!(edges_are_symmetric::<DynnikovPlane>(&map));
        assert_eq!(map.layer_sizes()[0], 3);
    }

    #[test]
    fn bfs_rejects_bad_seeds() {
        let bad = CayleySpec::<DynnikovPlane>::new(vec![dc(2, 0)], 3);
        assert!(matches!(bfs_distances(&bad), Err(Error::InvalidSeed(_))));
        let none = CayleySpec::<TorusPlane>::new(vec![], 3);
        assert_eq!(bfs_distances(&none).unwrap_err(), Error::EmptySeeds);
        let bad = CayleySpec::<TorusPlane>::new(vec![tc(2, 4)], 3);
        assert!(bfs_distances(&bad).is_err());
    }

    #[test]
    fn depth_zero_is_seeds() {
        let map = bfs_distances(&CayleySpec::<TorusPlane>::from_terminals(0)).unwrap();
        assert_eq!(map.len(), 6);
    }

    #[test]
    fn oracle_matches_plain_bfs() {
        let plain = bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(7)).unwrap();
        let oracle = DistanceOracle::<DynnikovPlane>::new(7);
        for (v, d) in plain.iter() {
            assert_eq!(oracle.distance(v), Some(d), "{v:?}");
        }
        // something just past the radius
        let far = (0..)
            .map(|k| dc(2 * k + 1, 2))
            .find(|v| !plain.contains(v))
            .unwrap();
        assert_eq!(oracle.distance(&far), None);
    }

    #[test]
    fn census_examples() {
        let t = torus_census(3).unwrap();
        assert!(t.is_consistent(), "{:?}", t.mismatches);
        assert_eq!(t.orbit_count(), 5);
        assert_eq!(TorusOrbit::of(&tc(2, 1)), Some(TorusOrbit::PEvenQ1));
        assert_eq!(TorusOrbit::of(&tc(1, 1)), TorusOrbit::of(&tc(3, 5)));

        let d = dynnikov_census(3).unwrap();
        assert!(d.is_consistent(), "{:?}", d.mismatches);
        assert_eq!(d.orbit_count(), 3);
        assert!(dynnikov_census(0).is_err());
    }

    #[test]
    fn cycles_in_small_balls() {
        assert!(find_simple_cycles::<TorusPlane>(&tc(1, 0), 6).unwrap().is_empty());
        let cycles = find_simple_cycles::<TorusPlane>(&tc(1, 1), 6).unwrap();
        assert_eq!(cycles.len(), 1);
        let got: BTreeSet<_> = cycles[0].iter().cloned().collect();
        let want: BTreeSet<_> = [tc(1, 1), tc(1, -1), tc(-1, -1), tc(-1, 1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn dynnikov_e_component_has_one_cycle() {
        // the 4-cycle on (±1, ±1) folds onto the tc and td edges joining e and (1, 0)
        let cycles = find_simple_cycles::<DynnikovPlane>(&dc(-1, 0), 6).unwrap();
        assert_eq!(cycles, vec![vec![dc(-1, 0), dc(1, 0)]]);
        assert!(find_simple_cycles::<DynnikovPlane>(&dc(0, 1), 6).unwrap().is_empty());
    }

    #[test]
    fn covering_small() {
        let r = check_covering(6, 8).unwrap();
        assert!(r.is_consistent(), "{r:?}");
        assert_eq!(r.confirmed, r.checked);
        assert!(r.deepest <= 8);
        assert_eq!(r.component_map[&TorusOrbit::BothOdd], [CurveClass::E].into());
        for (orbit, classes) in &r.component_map {
            assert_eq!(classes, &[projected_class(*orbit)].into());
        }
    }

    #[test]
    fn descent_holds_on_large_boxes() {
        // both actions and both norms are positively homogeneous, so a box
        // this size meets every linear piece
        let n = 120i64;
        let torus: Vec<TorusCoord> = (-n..=n)
            .flat_map(|p| (-n..=n).filter_map(move |q| TorusCoord::new(p, q).ok()))
            .filter(|v| v.is_primitive())
            .collect();
        assert!(descent_violations::<TorusPlane>(&torus).is_empty());
        let dynnikov: Vec<DynnikovCoord> = (-n..=n)
            .flat_map(|a| (-n..=n).filter_map(move |b| DynnikovCoord::new(a, b).ok()))
            .filter(|d| curve_kind(d).is_essential())
            .collect();
        assert!(descent_violations::<DynnikovPlane>(&dynnikov).is_empty());
    }

    #[test]
    fn bounded_distances_match_balls() {
        for bound in [1, 3, 10] {
            let bounded = bounded_distances::<DynnikovPlane>(bound).unwrap();
            let ball = bfs_distances(&CayleySpec::<DynnikovPlane>::from_terminals(bounded.depth_limit())).unwrap();
            for (v, d) in bounded.iter() {
                assert_eq!(ball.get(v), Some(d), "{v:?}");
            }
            let torus = bounded_distances::<TorusPlane>(bound).unwrap();
            let ball = bfs_distances(&CayleySpec::<TorusPlane>::from_terminals(torus.depth_limit())).unwrap();
            for (v, d) in torus.iter() {
                assert_eq!(ball.get(v), Some(d), "{v:?}");
            }
        }
        assert!(bounded_distances::<TorusPlane>(0).is_err());
    }
}
