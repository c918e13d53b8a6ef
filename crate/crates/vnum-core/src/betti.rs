//! Graded Betti tables and derived homological invariants.
//!
//! The main route polarizes the ideal (a no-op for square-free input) and
//! applies Hochster's formula: for a square-free ideal with Stanley–Reisner
//! complex Δ,
//!
//! ```text
//! β_{i,j}(S/I) = Σ_{|W| = j} dim H~_{j−i−1}(Δ|_W)
//! ```
//!
//! summed over vertex subsets W, with homology over the chosen field.
//! Generators are first grouped into blocks connected by shared variables;
//! each block's table is computed independently and the results are
//! combined by the tensor (Künneth) rule, since minimal free resolutions
//! over disjoint variable sets tensor to a minimal free resolution. This
//! leaves the output unchanged while keeping the subset enumeration
//! exponential only in the largest block.
//!
//! An independent oracle computes the same table directly from the Koszul
//! complex, split by multidegree; it shares no simplicial machinery with
//! the main route and is feasible only for small inputs.

use crate::complex::homology_from_face_masks;
use crate::decompose::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::field::{matrix_rank, FieldChoice};
use crate::hilbert::{hilbert_series, HilbertSeries};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Default cap on the polarized variable count for the Hochster route.
pub const DEFAULT_POLARIZED_CAP: usize = 22;

/// Variable cap for the Koszul oracle.
pub const KOSZUL_VAR_CAP: usize = 8;

/// Cap on the number of multidegree strands the Koszul oracle will visit.
pub const KOSZUL_STRAND_CAP: u128 = 200_000;

/// A graded Betti table of `S/I`: `entries[(i, j)] = β_{i,j}`, storing only
/// nonzero values. Every table of a proper ideal contains `(0, 0) ↦ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldChoice,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    fn new(field: FieldChoice, entries: BTreeMap<(u32, u32), u64>) -> Self {
        debug_assert!(entries.values().all(|&v| v > 0));
        BettiTable { field, entries }
    }

    pub fn field(&self) -> FieldChoice {
        self.field
    }

    /// Nonzero entries, keyed by homological degree and internal degree.
    pub fn entries(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Projective dimension: the largest homological degree present.
    pub fn proj_dim(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity: max of `j − i` over nonzero entries.
    pub fn regularity(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(h, _), _)| h == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// The entries of the last column of the resolution, as `(j, β)` pairs.
    pub fn last_column(&self) -> Vec<(u32, u64)> {
        let pd = self.proj_dim();
        self.entries
            .iter()
            .filter(|&(&(i, _), _)| i == pd)
            .map(|(&(_, j), &v)| (j, v))
            .collect()
    }

    /// JSON form: entries keyed as `"i,j"`, plus the field label.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), &v)| (format!("{i},{j}"), json!(v)))
            .collect();
        json!({
            "field": self.field.label(),
            "entries": entries,
            "proj_dim": self.proj_dim(),
            "regularity": self.regularity(),
        })
    }
}

impl fmt::Display for BettiTable {
    /// Triangular layout: row `r` holds `β_{i, i+r}` under column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.proj_dim() as usize;
        let reg = self.regularity() as usize;
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        grid.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.total(i as u32).to_string()));
        grid.push(totals);
        for r in 0..=reg {
            let mut row = vec![format!("{r}:")];
            row.extend((0..=pd).map(|i| match self.get(i as u32, (i + r) as u32) {
                0 => ".".to_string(),
                v => v.to_string(),
            }));
            grid.push(row);
        }
        let widths: Vec<usize> = (0..=pd + 1)
            .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        for (k, row) in grid.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[c])?;
            }
        }
        Ok(())
    }
}

/// Graded Betti table of `S/I` over `field`, with the default cap on the
/// polarized variable count.
pub fn betti_table(ideal: &MonomialIdeal, field: &FieldChoice) -> Result<BettiTable> {
    betti_table_with_cap(ideal, field, DEFAULT_POLARIZED_CAP)
}

/// As [`betti_table`], with an explicit cap on the polarized variable
/// count (at most 32).
pub fn betti_table_with_cap(
    ideal: &MonomialIdeal,
    field: &FieldChoice,
    cap: usize,
) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no Betti table"));
    }
    if ideal.is_zero() {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        return Ok(BettiTable::new(*field, entries));
    }
    let polarized = ideal.polarize()?;
    let square_free = &polarized.ideal;
    let n = square_free.ring().num_vars();
    let cap = cap.min(crate::complex::MAX_VERTICES);
    if n > cap {
        return Err(Error::resource(format!(
            "polarized ring has {n} variables, beyond the cap of {cap}"
        )));
    }
    Ok(hochster_betti(square_free, field))
}

/// Hochster route for a square-free proper ideal within the cap.
fn hochster_betti(square_free: &MonomialIdeal, field: &FieldChoice) -> BettiTable {
    let gen_supports: Vec<Vec<usize>> = square_free
        .gens()
        .iter()
        .map(|g| g.support())
        .collect();
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), 1u64);
    for block in variable_blocks(&gen_supports) {
        let block_entries = block_betti(&block, field);
        entries = tensor_entries(&entries, &block_entries);
    }
    BettiTable::new(*field, entries)
}

/// A connected group of generators: the variables they touch (sorted) and
/// each generator's support as a bitmask over those variables.
struct GeneratorBlock {
    gen_masks: Vec<u32>,
    width: usize,
}

/// Group generator supports into blocks connected by shared variables.
/// Variables in no generator belong to no block: restricted to a subset
/// containing such a vertex, the Stanley–Reisner complex is a cone, so
/// those subsets contribute nothing to the Betti table.
fn variable_blocks(gen_supports: &[Vec<usize>]) -> Vec<GeneratorBlock> {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
        let p = *parent.get(&v).unwrap_or(&v);
        if p == v {
            return v;
        }
        let root = find(parent, p);
        parent.insert(v, root);
        root
    }
    for support in gen_supports {
        for &v in support {
            parent.entry(v).or_insert(v);
        }
        for w in support.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent.insert(a, b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let vars: Vec<usize> = parent.keys().copied().collect();
    for v in vars {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    groups
        .into_values()
        .map(|mut vars| {
            vars.sort_unstable();
            let slot: BTreeMap<usize, usize> =
                vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
            let gen_masks = gen_supports
                .iter()
                .filter(|s| !s.is_empty() && slot.contains_key(&s[0]))
                .map(|s| s.iter().fold(0u32, |m, v| m | (1 << slot[v])))
                .collect();
            GeneratorBlock {
                gen_masks,
                width: vars.len(),
            }
        })
        .collect()
}

/// Betti entries contributed by one block, via Hochster's formula over
/// all subsets of the block's vertices.
fn block_betti(block: &GeneratorBlock, field: &FieldChoice) -> BTreeMap<(u32, u32), u64> {
    let width = block.width;
    let full = 1usize << width;
    // non_face[s] ⇔ some generator's support is contained in s.
    let mut non_face = vec![false; full];
    for &g in &block.gen_masks {
        non_face[g as usize] = true;
    }
    for s in 1..full {
        if non_face[s] {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if non_face[s & !bit] {
                non_face[s] = true;
                break;
            }
            rest &= !bit;
        }
    }
    (0..full as u32)
        .into_par_iter()
        .map(|subset| {
            let mut faces = Vec::new();
            let mut sub = subset;
            loop {
                if !non_face[sub as usize] {
                    faces.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & subset;
            }
            // A restriction that is a cone — some vertex extends every
            // face to a face — is contractible and contributes nothing.
            let mut rest = subset;
            'apex: while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= !bit;
                for &f in &faces {
                    if non_face[(f | bit) as usize] {
                        continue 'apex;
                    }
                }
                return Vec::new();
            }
            faces.sort_unstable();
            let dims = homology_from_face_masks(&faces, field);
            let j = subset.count_ones();
            let mut local: Vec<((u32, u32), u64)> = Vec::new();
            for (idx, &h) in dims.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                // Index idx holds homological degree idx − 1, so the
                // Hochster shift j − degree − 1 becomes j − idx.
                let i = j - idx as u32;
                local.push(((i, j), h as u64));
            }
            local
        })
        .fold(BTreeMap::new, |mut acc: BTreeMap<(u32, u32), u64>, local| {
            for (key, v) in local {
                *acc.entry(key).or_insert(0) += v;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        })
}

/// Tensor (Künneth) combination of Betti entries over disjoint variable
/// sets: bigraded convolution.
fn tensor_entries(
    a: &BTreeMap<(u32, u32), u64>,
    b: &BTreeMap<(u32, u32), u64>,
) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for (&(i1, j1), &v1) in a {
        for (&(i2, j2), &v2) in b {
            let entry = out.entry((i1 + i2, j1 + j2)).or_insert(0u64);
            *entry = entry
                .checked_add(v1.checked_mul(v2).expect("Betti entry overflow"))
                .expect("Betti entry overflow");
        }
    }
    out
}

/// Independent check: the same Betti table computed from the Koszul
/// complex of the ambient variables tensored with `S/I`, one multidegree
/// strand at a time. No polarization and no simplicial homology are
/// involved. Feasible only within [`KOSZUL_VAR_CAP`] and
/// [`KOSZUL_STRAND_CAP`].
pub fn koszul_betti_oracle(ideal: &MonomialIdeal, field: &FieldChoice) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no Betti table"));
    }
    let n = ideal.ring().num_vars();
    if n > KOSZUL_VAR_CAP {
        return Err(Error::resource(format!(
            "Koszul oracle supports at most {KOSZUL_VAR_CAP} variables, got {n}"
        )));
    }
    let mut entries = BTreeMap::new();
    entries.insert((0u32, 0u32), 1u64);
    if ideal.is_zero() {
        return Ok(BettiTable::new(*field, entries));
    }
    entries.clear();

    // Strands run over exponent vectors bounded by the generator lcm.
    let mut bound = vec![0u32; n];
    for g in ideal.gens() {
        for (i, b) in bound.iter_mut().enumerate() {
            *b = (*b).max(g.exponent(i));
        }
    }
    let strand_count: u128 = bound.iter().map(|&b| b as u128 + 1).product();
    if strand_count > KOSZUL_STRAND_CAP {
        return Err(Error::resource(format!(
            "Koszul oracle would visit {strand_count} strands, beyond the cap of {KOSZUL_STRAND_CAP}"
        )));
    }

    let mut exponents = vec![0u32; n];
    loop {
        accumulate_strand(ideal, &exponents, field, &mut entries)?;
        // Odometer step through the exponent box.
        let mut pos = 0;
        loop {
            if pos == n {
                debug_assert_eq!(entries.get(&(0, 0)), Some(&1));
                return Ok(BettiTable::new(*field, entries));
            }
            if exponents[pos] < bound[pos] {
                exponents[pos] += 1;
                break;
            }
            exponents[pos] = 0;
            pos += 1;
        }
    }
}

/// Homology of one multidegree strand of `Koszul(x_1..x_n) ⊗ S/I`.
fn accumulate_strand(
    ideal: &MonomialIdeal,
    multidegree: &[u32],
    field: &FieldChoice,
    entries: &mut BTreeMap<(u32, u32), u64>,
) -> Result<()> {
    let n = multidegree.len();
    let support: Vec<usize> = (0..n).filter(|&i| multidegree[i] > 0).collect();
    let width = support.len();
    let j: u32 = multidegree.iter().sum();

    // valid[t] ⇔ the basis element survives in S/I: the monomial with one
    // copy of each support variable in t removed lies outside the ideal.
    let full = 1usize << width;
    let mut valid = vec![false; full];
    for (t, slot) in valid.iter_mut().enumerate() {
        let mut exps = multidegree.to_vec();
        for (k, &var) in support.iter().enumerate() {
            if t & (1 << k) != 0 {
                exps[var] -= 1;
            }
        }
        let m = Monomial::new(exps);
        *slot = !ideal.contains(&m)?;
    }

    let levels: Vec<Vec<usize>> = (0..=width)
        .map(|i| {
            (0..full)
                .filter(|&t| t.count_ones() as usize == i && valid[t])
                .collect()
        })
        .collect();
    let mut ranks = vec![0usize; width + 2];
    for i in 1..=width {
        let rows = levels[i - 1].len();
        let cols = levels[i].len();
        if rows == 0 || cols == 0 {
            continue;
        }
        let row_of: BTreeMap<usize, usize> = levels[i - 1]
            .iter()
            .enumerate()
            .map(|(r, &t)| (t, r))
            .collect();
        let mut matrix = vec![vec![0i64; cols]; rows];
        for (col, &t) in levels[i].iter().enumerate() {
            let mut sign = 1i64;
            for k in 0..width {
                let bit = 1usize << k;
                if t & bit == 0 {
                    continue;
                }
                if let Some(&row) = row_of.get(&(t & !bit)) {
                    matrix[row][col] = sign;
                }
                sign = -sign;
            }
        }
        ranks[i] = matrix_rank(&matrix, field);
    }
    for i in 0..=width {
        let h = levels[i].len() - ranks[i] - ranks[i + 1];
        if h > 0 {
            *entries.entry((i as u32, j)).or_insert(0) += h as u64;
        }
    }
    Ok(())
}

/// Field-dependent homological profile of `S/I`, with the Betti table and
/// Hilbert series it was derived from.
#[derive(Debug, Clone)]
pub struct HomologicalSummary {
    pub regularity: u32,
    pub proj_dim: u32,
    pub depth: usize,
    pub krull_dim: usize,
    pub cohen_macaulay: bool,
    /// Cohen–Macaulay type `Σ_j β_{pd,j}`; only meaningful (and only
    /// present) when the quotient is Cohen–Macaulay.
    pub cm_type: Option<u64>,
    pub gorenstein: bool,
    pub level: bool,
    /// Degree of the Hilbert-series numerator minus the Krull dimension;
    /// present only in the Cohen–Macaulay case.
    pub a_invariant: Option<i64>,
    pub betti: BettiTable,
    pub hilbert: HilbertSeries,
}

impl HomologicalSummary {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "regularity": self.regularity,
            "proj_dim": self.proj_dim,
            "depth": self.depth,
            "krull_dim": self.krull_dim,
            "cohen_macaulay": self.cohen_macaulay,
            "type": self.cm_type,
            "gorenstein": self.gorenstein,
            "level": self.level,
            "a_invariant": self.a_invariant,
            "betti": self.betti.to_json(),
            "hilbert": self.hilbert.to_json(),
        })
    }
}

/// Compute the homological summary of `S/I` over `field`.
///
/// The Gorenstein and level flags are defined only for Cohen–Macaulay
/// quotients and are reported as `false` otherwise.
pub fn summary(ideal: &MonomialIdeal, field: &FieldChoice) -> Result<HomologicalSummary> {
    summary_with_cap(ideal, field, DEFAULT_POLARIZED_CAP)
}

/// As [`summary`], with an explicit polarized-variable cap for the Betti
/// computation.
pub fn summary_with_cap(
    ideal: &MonomialIdeal,
    field: &FieldChoice,
    cap: usize,
) -> Result<HomologicalSummary> {
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no homological summary"));
    }
    let n = ideal.ring().num_vars();
    let height = if ideal.is_zero() {
        0
    } else {
        irreducible_decomposition(ideal)?.height
    };
    let krull_dim = n - height;
    let betti = betti_table_with_cap(ideal, field, cap)?;
    let proj_dim = betti.proj_dim();
    let regularity = betti.regularity();
    // Auslander–Buchsbaum over the original ring.
    let depth = n - proj_dim as usize;
    let cohen_macaulay = proj_dim as usize == height;
    let last = betti.last_column();
    let cm_type = cohen_macaulay.then(|| last.iter().map(|&(_, v)| v).sum::<u64>());
    let gorenstein = cm_type == Some(1);
    let level = cohen_macaulay && last.len() == 1;
    let hilbert = hilbert_series(ideal)?;
    debug_assert_eq!(hilbert.pole_order(), krull_dim);
    let a_invariant = cohen_macaulay
        .then(|| hilbert.numerator_degree() as i64 - krull_dim as i64);
    Ok(HomologicalSummary {
        regularity,
        proj_dim,
        depth,
        krull_dim,
        cohen_macaulay,
        cm_type,
        gorenstein,
        level,
        a_invariant,
        betti,
        hilbert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn q() -> FieldChoice {
        FieldChoice::Rationals
    }

    fn table(pairs: &[(u32, u32, u64)]) -> BTreeMap<(u32, u32), u64> {
        pairs.iter().map(|&(i, j, v)| ((i, j), v)).collect()
    }

    #[test]
    fn betti_of_a_single_quadric() {
        let ideal = parse_ideal("vars: x y\nx*y\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(t.entries(), &table(&[(0, 0, 1), (1, 2, 1)]));
        assert_eq!(t.proj_dim(), 1);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn betti_of_a_squared_variable_via_polarization() {
        let ideal = parse_ideal("vars: x y\nx^2\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(t.entries(), &table(&[(0, 0, 1), (1, 2, 1)]));
    }

    #[test]
    fn betti_of_the_four_cycle() {
        let ideal = parse_ideal("vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(
            t.entries(),
            &table(&[(0, 0, 1), (1, 2, 4), (2, 3, 4), (3, 4, 1)])
        );
        assert_eq!(t.regularity(), 1);
        assert_eq!(t.proj_dim(), 3);
    }

    #[test]
    fn betti_of_a_complete_intersection() {
        let ideal = parse_ideal("vars: x y\nx^2\ny^3\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(
            t.entries(),
            &table(&[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)])
        );
        assert_eq!(t.regularity(), 3);
    }

    #[test]
    fn betti_of_zero_ideal_is_trivial() {
        let ideal = parse_ideal("vars: x y z\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(t.entries(), &table(&[(0, 0, 1)]));
    }

    #[test]
    fn betti_rejects_unit_ideal_and_oversize_input() {
        let unit = MonomialIdeal::unit(crate::ring::AmbientRing::standard(2));
        assert!(betti_table(&unit, &q()).is_err());
        let ideal = parse_ideal("vars: x y\nx^2\ny^3\n").unwrap();
        assert!(betti_table_with_cap(&ideal, &q(), 3).is_err());
    }

    #[test]
    fn koszul_oracle_matches_hochster_on_small_examples() {
        let sources = [
            "vars: x y\nx*y\n",
            "vars: x y\nx^2\ny^3\n",
            "vars: x y z\nx^2\nx*y\n",
            "vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n",
            "vars: x y z\nx*y\ny*z\n",
            "vars: x y z\nx^2*y\ny^2*z\nz^2*x\n",
        ];
        for src in sources {
            let ideal = parse_ideal(src).unwrap();
            for field in [q(), FieldChoice::Prime(2)] {
                let fast = betti_table(&ideal, &field).unwrap();
                let oracle = koszul_betti_oracle(&ideal, &field).unwrap();
                assert_eq!(fast.entries(), oracle.entries(), "disagree on {src:?}");
            }
        }
    }

    #[test]
    fn koszul_oracle_enforces_caps() {
        let ideal = parse_ideal("vars: x1 x2 x3 x4 x5 x6 x7 x8 x9\nx1*x2\n").unwrap();
        assert!(koszul_betti_oracle(&ideal, &q()).is_err());
    }

    #[test]
    fn tensor_rule_matches_direct_computation_on_disjoint_blocks() {
        // (x1 x2, x3 x4) is a complete intersection of two quadrics; the
        // blocks are computed separately and tensored.
        let ideal = parse_ideal("vars: x1 x2 x3 x4\nx1*x2\nx3*x4\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        assert_eq!(
            t.entries(),
            &table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)])
        );
        let oracle = koszul_betti_oracle(&ideal, &q()).unwrap();
        assert_eq!(t.entries(), oracle.entries());
    }

    #[test]
    fn summary_of_a_complete_intersection_is_gorenstein() {
        let ideal = parse_ideal("vars: x y\nx^2\ny^3\n").unwrap();
        let s = summary(&ideal, &q()).unwrap();
        assert_eq!(s.regularity, 3);
        assert_eq!(s.proj_dim, 2);
        assert_eq!(s.depth, 0);
        assert_eq!(s.krull_dim, 0);
        assert!(s.cohen_macaulay);
        assert_eq!(s.cm_type, Some(1));
        assert!(s.gorenstein);
        assert!(s.level);
        assert_eq!(s.a_invariant, Some(3));
    }

    #[test]
    fn summary_of_the_four_cycle_is_not_cohen_macaulay() {
        let ideal = parse_ideal("vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n").unwrap();
        let s = summary(&ideal, &q()).unwrap();
        assert_eq!(s.regularity, 1);
        assert_eq!(s.proj_dim, 3);
        assert_eq!(s.depth, 1);
        assert_eq!(s.krull_dim, 2);
        assert!(!s.cohen_macaulay);
        assert_eq!(s.cm_type, None);
        assert!(!s.gorenstein);
        assert!(!s.level);
        assert_eq!(s.a_invariant, None);
    }

    #[test]
    fn summary_of_mixed_ideal_reports_failure_of_cm() {
        // (x^2, x y) = (x) ∩ (x^2, y): height 1, proj dim 2.
        let ideal = parse_ideal("vars: x y\nx^2\nx*y\n").unwrap();
        let s = summary(&ideal, &q()).unwrap();
        assert_eq!(s.proj_dim, 2);
        assert_eq!(s.regularity, 1);
        assert!(!s.cohen_macaulay);
        let t = &s.betti;
        assert_eq!(
            t.entries(),
            &table(&[(0, 0, 1), (1, 2, 2), (2, 3, 1)])
        );
    }

    #[test]
    fn summary_of_zero_ideal() {
        let ideal = parse_ideal("vars: x y z\n").unwrap();
        let s = summary(&ideal, &q()).unwrap();
        assert_eq!(s.proj_dim, 0);
        assert_eq!(s.regularity, 0);
        assert_eq!(s.depth, 3);
        assert_eq!(s.krull_dim, 3);
        assert!(s.cohen_macaulay && s.gorenstein && s.level);
        assert_eq!(s.a_invariant, Some(-3));
    }

    #[test]
    fn betti_display_is_triangular() {
        let ideal = parse_ideal("vars: x y\nx^2\ny^3\n").unwrap();
        let t = betti_table(&ideal, &q()).unwrap();
        let shown = t.to_string();
        let lines: Vec<&str> = shown.lines().collect();
        assert_eq!(lines.len(), 6); // header, total, rows 0..=3
        assert!(lines[1].contains("total:"));
        assert!(lines[2].trim_start().starts_with("0:"));
    }
}
