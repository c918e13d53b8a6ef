//! Deterministic corpus generators: graphs and their edge ideals, curated
//! examples, and seeded random ideals.
//!
//! Randomness contract: every random generator is driven by [`SplitMix64`],
//! a single explicitly documented 64-bit mixing generator. Outputs are
//! reproducible for a fixed seed within this crate; no cross-library
//! stability is promised.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;
use std::collections::BTreeSet;
use std::fmt;

/// Maximum variable count accepted by the random-ideal generators.
pub const RANDOM_VAR_CAP: usize = 10;

/// SplitMix64: adds the golden-ratio increment to a 64-bit state and
/// scrambles it with two xor-multiply rounds. Small, fast, and with a
/// guaranteed full 2^64 period.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by the multiply-shift reduction.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u64
    }

    /// True with probability `percent / 100`.
    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent.min(100)
    }
}

/// A finite simple graph on vertices `0..vertex_count`: no loops, no
/// duplicate edges. Edges are stored as ordered pairs `(a, b)` with
/// `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::structural(format!(
                    "loop at vertex {a} is not allowed"
                )));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::structural(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Path on `n ≥ 1` vertices: edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::domain("a path needs at least one vertex"));
        }
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::domain("a cycle needs at least three vertices"));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star on `n ≥ 2` vertices: vertex 0 joined to all others.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::domain("a star needs at least two vertices"));
        }
        Graph::new(n, (1..n).map(|i| (0, i)))
    }

    /// Complete graph on `n ≥ 2` vertices.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::domain("a complete graph needs at least two vertices"));
        }
        Graph::new(
            n,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
        )
    }

    /// Disjoint union; vertices are relabeled block-wise in order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let total: usize = parts.iter().map(|g| g.vertex_count).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for part in parts {
            edges.extend(part.edges().map(|(a, b)| (a + offset, b + offset)));
            offset += part.vertex_count;
        }
        Graph::new(total, edges)
    }

    /// Whisker graph: one new pendant vertex attached to each original
    /// vertex. Vertex `i` gets the pendant `vertex_count + i`.
    pub fn whisker(&self) -> Graph {
        let n = self.vertex_count;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend((0..n).map(|i| (i, n + i)));
        Graph::new(2 * n, edges).expect("whisker edges are valid by construction")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices: ", self.vertex_count)?;
        for (k, (a, b)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}, {}}}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// The edge ideal `I(G) = (x_a x_b : {a, b} ∈ E)` in the standard ring on
/// the graph's vertices. The graph must have at least one edge.
pub fn edge_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    if graph.edge_count() == 0 {
        return Err(Error::domain("an edgeless graph has no edge ideal"));
    }
    let n = graph.vertex_count();
    let ring = AmbientRing::standard(n);
    let gens = graph
        .edges()
        .map(|(a, b)| {
            let mut e = vec![0u32; n];
            e[a] = 1;
            e[b] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// A curated 11-vertex, 25-edge graph. The quotient by its edge ideal is
/// Cohen–Macaulay and level over the rationals with v-number 3 and
/// regularity 2, but fails to be Cohen–Macaulay in characteristic 2 —
/// so both the v-number/regularity gap and the field dependence of
/// homological invariants are visible on one example.
pub fn level_graph_11() -> Graph {
    let pairs = [
        (1, 3),
        (1, 4),
        (1, 7),
        (1, 10),
        (1, 11),
        (2, 4),
        (2, 5),
        (2, 8),
        (2, 10),
        (2, 11),
        (3, 5),
        (3, 6),
        (3, 8),
        (3, 11),
        (4, 6),
        (4, 9),
        (4, 11),
        (5, 7),
        (5, 9),
        (5, 11),
        (6, 8),
        (6, 9),
        (7, 9),
        (7, 10),
        (8, 10),
    ];
    Graph::new(11, pairs.map(|(a, b)| (a - 1, b - 1)))
        .expect("the curated edge list is valid")
}

/// Seeded Erdős–Rényi-style graph: each possible edge appears with
/// probability `edge_percent / 100`. May be edgeless.
pub fn random_graph(seed: u64, n: usize, edge_percent: u64) -> Result<Graph> {
    if n == 0 || n > 2 * RANDOM_VAR_CAP {
        return Err(Error::domain(format!(
            "random graphs support 1..={} vertices, got {n}",
            2 * RANDOM_VAR_CAP
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.chance(edge_percent) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges)
}

/// Seeded random monomial ideal: between 1 and `max_gens` generators of
/// degree between 1 and `max_deg`, drawn uniformly and then minimalized.
/// Square-free mode draws supports instead of exponent multisets. The
/// result is always proper and nonzero.
pub fn random_monomial_ideal(
    seed: u64,
    n: usize,
    max_gens: usize,
    max_deg: u32,
    square_free: bool,
) -> Result<MonomialIdeal> {
    if n == 0 || n > RANDOM_VAR_CAP {
        return Err(Error::domain(format!(
            "random ideals support 1..={RANDOM_VAR_CAP} variables, got {n}"
        )));
    }
    if max_gens == 0 || max_deg == 0 {
        return Err(Error::domain(
            "random ideals need max_gens ≥ 1 and max_deg ≥ 1",
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let count = 1 + rng.below(max_gens as u64) as usize;
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        gens.push(random_monomial(&mut rng, n, max_deg, square_free));
    }
    let ring = AmbientRing::standard(n);
    let ideal = MonomialIdeal::new(ring, gens)?;
    debug_assert!(ideal.is_proper_nonzero());
    Ok(ideal)
}

fn random_monomial(rng: &mut SplitMix64, n: usize, max_deg: u32, square_free: bool) -> Monomial {
    let mut exps = vec![0u32; n];
    if square_free {
        let size = 1 + rng.below(max_deg.min(n as u32) as u64) as usize;
        // Partial Fisher–Yates: the first `size` slots become the support.
        let mut vars: Vec<usize> = (0..n).collect();
        for k in 0..size {
            let pick = k + rng.below((n - k) as u64) as usize;
            vars.swap(k, pick);
            exps[vars[k]] = 1;
        }
    } else {
        let degree = 1 + rng.below(max_deg as u64) as u32;
        for _ in 0..degree {
            exps[rng.below(n as u64) as usize] += 1;
        }
    }
    Monomial::new(exps)
}

/// Seeded random artinian ideal: a power of every variable (so the
/// quotient is finite-dimensional) plus `extra_gens` random generators.
pub fn random_artinian_ideal(
    seed: u64,
    n: usize,
    max_deg: u32,
    extra_gens: usize,
) -> Result<MonomialIdeal> {
    if n == 0 || n > RANDOM_VAR_CAP {
        return Err(Error::domain(format!(
            "random ideals support 1..={RANDOM_VAR_CAP} variables, got {n}"
        )));
    }
    if max_deg == 0 {
        return Err(Error::domain("random ideals need max_deg ≥ 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut gens = Vec::new();
    for i in 0..n {
        let e = 1 + rng.below(max_deg as u64) as u32;
        gens.push(Monomial::variable(i, n).pow(e));
    }
    for _ in 0..extra_gens {
        gens.push(random_monomial(&mut rng, n, max_deg, false));
    }
    MonomialIdeal::new(AmbientRing::standard(n), gens)
}

/// Parse the graph text format: a `graph: n` header line, then one
/// 1-indexed `i j` edge per line. `#` starts a comment; blank lines are
/// skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if vertex_count.is_none() {
            let Some(rest) = line.strip_prefix("graph:") else {
                return Err(Error::parse(
                    line_no,
                    "expected a `graph: n` header before any edges".to_string(),
                ));
            };
            let n: usize = rest.trim().parse().map_err(|_| {
                Error::parse(line_no, format!("invalid vertex count {:?}", rest.trim()))
            })?;
            if n == 0 {
                return Err(Error::parse(line_no, "vertex count must be positive"));
            }
            vertex_count = Some(n);
            continue;
        }
        let n = vertex_count.unwrap();
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("expected an `i j` edge, got {line:?}"),
            ));
        }
        let mut pair = [0usize; 2];
        for (slot, token) in pair.iter_mut().zip(&parts) {
            let v: usize = token.parse().map_err(|_| {
                Error::parse(line_no, format!("invalid vertex {token:?}"))
            })?;
            if v == 0 || v > n {
                return Err(Error::parse(
                    line_no,
                    format!("vertex {v} out of range 1..={n}"),
                ));
            }
            *slot = v - 1;
        }
        if pair[0] == pair[1] {
            return Err(Error::parse(line_no, format!("loop at vertex {}", pair[0] + 1)));
        }
        edges.push((pair[0], pair[1]));
    }
    let Some(n) = vertex_count else {
        return Err(Error::parse(1, "missing `graph: n` header".to_string()));
    };
    Graph::new(n, edges)
}

/// Inverse of [`parse_graph`]: header plus one 1-indexed edge per line.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("graph: {}\n", graph.vertex_count());
    for (a, b) in graph.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::associated_primes;

    #[test]
    fn family_shapes() {
        assert_eq!(Graph::path(5).unwrap().edge_count(), 4);
        assert_eq!(Graph::cycle(4).unwrap().edge_count(), 4);
        assert_eq!(Graph::star(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 5)]).is_err());
    }

    #[test]
    fn whisker_doubles_the_vertices() {
        let star = Graph::star(3).unwrap();
        let w = star.whisker();
        assert_eq!(w.vertex_count(), 6);
        assert_eq!(w.edge_count(), 5);
        assert!(w.has_edge(0, 3) && w.has_edge(1, 4) && w.has_edge(2, 5));

        let lonely = Graph::new(1, []).unwrap();
        let w1 = lonely.whisker();
        assert_eq!((w1.vertex_count(), w1.edge_count()), (2, 1));
    }

    #[test]
    fn disjoint_union_relabels_blockwise() {
        let p2 = Graph::path(2).unwrap();
        let u = Graph::disjoint_union(&[p2.clone(), p2]).unwrap();
        assert_eq!(u.vertex_count(), 4);
        let edges: Vec<_> = u.edges().collect();
        assert_eq!(edges, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn edge_ideal_of_the_four_cycle() {
        let ideal = edge_ideal(&Graph::cycle(4).unwrap()).unwrap();
        assert!(ideal.is_square_free());
        let mut gens = ideal.generator_strings();
        gens.sort();
        assert_eq!(gens, vec!["x1*x2", "x1*x4", "x2*x3", "x3*x4"]);
        assert!(edge_ideal(&Graph::new(3, []).unwrap()).is_err());
    }

    #[test]
    fn curated_graph_shape() {
        let g = level_graph_11();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 25);
        // Every vertex is covered; total degree is twice the edge count.
        let mut degrees = [0usize; 11];
        for (a, b) in g.edges() {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        assert_eq!(degrees.iter().sum::<usize>(), 50);
        assert!(degrees.iter().all(|&d| d >= 4));
    }

    #[test]
    fn associated_primes_of_edge_ideals_are_minimal_vertex_covers() {
        let graphs = [
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::star(4).unwrap(),
            Graph::complete(4).unwrap(),
        ];
        for g in graphs {
            let ideal = edge_ideal(&g).unwrap();
            let primes = associated_primes(&ideal).unwrap();
            let found: BTreeSet<Vec<usize>> =
                primes.iter().map(|p| p.support().to_vec()).collect();
            assert_eq!(found, minimal_vertex_covers(&g), "covers of {g}");
        }
    }

    fn minimal_vertex_covers(g: &Graph) -> BTreeSet<Vec<usize>> {
        let n = g.vertex_count();
        let is_cover = |mask: usize| {
            g.edges()
                .all(|(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0)
        };
        let covers: Vec<usize> = (0..1usize << n).filter(|&m| is_cover(m)).collect();
        covers
            .iter()
            .filter(|&&m| {
                !covers
                    .iter()
                    .any(|&other| other != m && other & m == other)
            })
            .map(|&m| (0..n).filter(|v| m & (1 << v) != 0).collect())
            .collect()
    }

    #[test]
    fn random_ideals_are_reproducible_and_respect_flags() {
        let a = random_monomial_ideal(17, 4, 5, 3, true).unwrap();
        let b = random_monomial_ideal(17, 4, 5, 3, true).unwrap();
        assert_eq!(a, b);
        assert!(a.is_square_free());
        assert!(a.is_proper_nonzero());

        let c = random_monomial_ideal(18, 4, 5, 3, true).unwrap();
        let d = random_monomial_ideal(19, 4, 5, 3, true).unwrap();
        assert!(a != c || c != d, "distinct seeds should vary");

        // Degree-1 generators only: always a variable-generated prime.
        for seed in 0..20 {
            let p = random_monomial_ideal(seed, 5, 4, 1, false).unwrap();
            assert!(p.is_prime(), "seed {seed} gave {p}");
        }
        assert!(random_monomial_ideal(0, 0, 3, 2, false).is_err());
        assert!(random_monomial_ideal(0, 11, 3, 2, false).is_err());
    }

    #[test]
    fn random_artinian_ideals_contain_all_variable_powers() {
        for seed in 0..10 {
            let ideal = random_artinian_ideal(seed, 4, 3, 2).unwrap();
            for i in 0..4 {
                let cube = Monomial::variable(i, 4).pow(3);
                assert!(ideal.contains(&cube).unwrap(), "seed {seed} var {i}");
            }
        }
    }

    #[test]
    fn random_graph_is_seeded() {
        let a = random_graph(5, 8, 40).unwrap();
        let b = random_graph(5, 8, 40).unwrap();
        assert_eq!(a, b);
        assert_eq!(random_graph(5, 8, 0).unwrap().edge_count(), 0);
        assert_eq!(
            random_graph(5, 8, 100).unwrap().edge_count(),
            Graph::complete(8).unwrap().edge_count()
        );
    }

    #[test]
    fn graph_text_round_trip() {
        let g = level_graph_11();
        let text = write_graph(&g);
        assert!(text.starts_with("graph: 11\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);

        let with_comments = "# a square\ngraph: 4\n1 2\n2 3 # right side\n3 4\n1 4\n";
        assert_eq!(
            parse_graph(with_comments).unwrap(),
            Graph::cycle(4).unwrap()
        );
    }

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let missing = parse_graph("1 2\n").unwrap_err();
        assert!(missing.to_string().contains("line 1"), "{missing}");
        let loop_err = parse_graph("graph: 3\n1 2\n2 2\n").unwrap_err();
        assert!(loop_err.to_string().contains("line 3"), "{loop_err}");
        let range = parse_graph("graph: 3\n1 4\n").unwrap_err();
        assert!(range.to_string().contains("line 2"), "{range}");
        assert!(parse_graph("graph: 0\n").is_err());
        assert!(parse_graph("").is_err());
    }
}
