//! Shift-relation machinery on polynomial rings carrying a finite family of
//! generators, each acting through a ring automorphism: the commutation law
//! `g·u = u·σ_u(g)` makes the pair relation `q ~_u p` decidable as
//! "σ_u(q) + p is not the unit ideal". The Weyl algebra instance uses the
//! shifts σ_{Y_i}: t_i ↦ t_i + 1 and σ_{X_i}: t_i ↦ t_i - 1.
//!
//! Reachability searches run over a caller-supplied finite candidate set
//! with a depth bound; absence of a chain is certified only relative to
//! that universe.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, PolyRing, VarSubstitution};
use crate::spectrum::PrimeIdeal;

/// A generator with an invertible variable-substitution automorphism.
/// The inverse is stored and the composition is checked on construction.
#[derive(Debug, Clone)]
pub struct HCGenerator {
    name: String,
    shift: VarSubstitution,
    inverse: VarSubstitution,
}

impl HCGenerator {
    pub fn new(name: impl Into<String>, shift: VarSubstitution, inverse: VarSubstitution) -> Result<HCGenerator> {
        if !shift.compose(&inverse).is_identity() || !inverse.compose(&shift).is_identity() {
            return Err(Error::InvalidArgument(
                "substitution and its inverse do not compose to the identity".into(),
            ));
        }
        Ok(HCGenerator {
            name: name.into(),
            shift,
            inverse,
        })
    }

    pub fn identity(name: impl Into<String>, ring: &Arc<PolyRing>) -> HCGenerator {
        HCGenerator {
            name: name.into(),
            shift: VarSubstitution::identity(ring),
            inverse: VarSubstitution::identity(ring),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shift(&self) -> &VarSubstitution {
        &self.shift
    }

    pub fn inverse(&self) -> &VarSubstitution {
        &self.inverse
    }
}

/// A ring together with its generator family.
#[derive(Debug, Clone)]
pub struct HCDatum {
    ring: Arc<PolyRing>,
    generators: Vec<HCGenerator>,
}

impl HCDatum {
    pub fn new(ring: Arc<PolyRing>, generators: Vec<HCGenerator>) -> Result<HCDatum> {
        for (i, g) in generators.iter().enumerate() {
            if !same_ring(&ring, g.shift.ring()) {
                return Err(Error::RingMismatch);
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        Ok(HCDatum { ring, generators })
    }

    /// The Weyl-algebra datum on `K[t_1..t_n]`: generators `Y_1..Y_n` with
    /// σ: t_i ↦ t_i + 1 and `X_1..X_n` with σ: t_i ↦ t_i - 1, identity on
    /// the other variables.
    pub fn weyl(n: usize) -> Result<HCDatum> {
        if n < 1 {
            return Err(Error::InvalidArgument("weyl datum needs n >= 1".into()));
        }
        let ring = PolyRing::new((1..=n).map(|i| format!("t{i}")))?;
        let mut generators = Vec::with_capacity(2 * n);
        for i in 0..n {
            generators.push(HCGenerator::new(
                format!("Y{}", i + 1),
                VarSubstitution::shift_var(&ring, i, 1),
                VarSubstitution::shift_var(&ring, i, -1),
            )?);
        }
        for i in 0..n {
            generators.push(HCGenerator::new(
                format!("X{}", i + 1),
                VarSubstitution::shift_var(&ring, i, -1),
                VarSubstitution::shift_var(&ring, i, 1),
            )?);
        }
        HCDatum::new(ring, generators)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[HCGenerator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&HCGenerator> {
        self.generators.iter().find(|g| g.name == name)
    }
}

/// The directed single-step relation: `q` relates to `p` through `u` when
/// `σ_u(q)` and `p` are not comaximal. The q-side is the shifted one.
pub fn equiv_u(q: &PrimeIdeal, p: &PrimeIdeal, u: &HCGenerator) -> Result<bool> {
    if !same_ring(q.ideal().ring(), u.shift.ring()) || !same_ring(p.ideal().ring(), u.shift.ring())
    {
        return Err(Error::RingMismatch);
    }
    let shifted = q.ideal().apply_substitution(&u.shift);
    Ok(!shifted.is_comaximal(p.ideal()))
}

/// A chain `q_0, ..., q_s` with generator indices `k_1, ..., k_s` such that
/// every consecutive pair satisfies the single-step relation; all primes in
/// a chain share one coheight.
#[derive(Debug, Clone)]
pub struct ChainWitness {
    pub primes: Vec<PrimeIdeal>,
    pub generator_indices: Vec<usize>,
}

impl ChainWitness {
    pub fn len(&self) -> usize {
        self.generator_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generator_indices.is_empty()
    }

    /// Re-derives every edge.
    pub fn verify(&self, datum: &HCDatum) -> Result<bool> {
        if self.primes.len() != self.generator_indices.len() + 1 {
            return Ok(false);
        }
        for (step, &k) in self.generator_indices.iter().enumerate() {
            let u = &datum.generators[k];
            if !equiv_u(&self.primes[step], &self.primes[step + 1], u)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn display_with(&self, mut label: impl FnMut(&PrimeIdeal) -> String, datum: &HCDatum) -> String {
        let mut out = label(&self.primes[0]);
        for (step, &k) in self.generator_indices.iter().enumerate() {
            out.push_str(&format!(
                " -[{}]-> {}",
                datum.generators[k].name,
                label(&self.primes[step + 1])
            ));
        }
        out
    }
}

fn check_same_coheight(reference: &PrimeIdeal, candidates: &[PrimeIdeal]) -> Result<i64> {
    let c = reference.coheight();
    if candidates.iter().any(|p| p.coheight() != c) {
        return Err(Error::MixedCoheights);
    }
    Ok(c)
}

/// Generator scan order from a source ideal: generators whose substitution
/// moves the ideal come first (in declaration order), then the fixers. The
/// step a chain records is therefore the generator that actually shifts the
/// source, matching how the two-step Weyl chains arise.
fn generator_scan_order(datum: &HCDatum, source: &PrimeIdeal) -> Vec<usize> {
    let mut movers = Vec::new();
    let mut fixers = Vec::new();
    for (k, g) in datum.generators.iter().enumerate() {
        let image = source.ideal().apply_substitution(&g.shift);
        if image.eq_ideal(source.ideal()) {
            fixers.push(k);
        } else {
            movers.push(k);
        }
    }
    movers.extend(fixers);
    movers
}

struct SearchGraph {
    nodes: Vec<PrimeIdeal>,
    /// edges[i][j] = first generator (in the source's scan order) with
    /// node_i -> node_j, if any.
    edges: Vec<Vec<Option<usize>>>,
}

impl SearchGraph {
    fn build(datum: &HCDatum, nodes: Vec<PrimeIdeal>) -> Result<SearchGraph> {
        let mut edges = vec![vec![None; nodes.len()]; nodes.len()];
        for (i, q) in nodes.iter().enumerate() {
            let scan = generator_scan_order(datum, q);
            for (j, p) in nodes.iter().enumerate() {
                for &k in &scan {
                    if equiv_u(q, p, &datum.generators[k])? {
                        edges[i][j] = Some(k);
                        break;
                    }
                }
            }
        }
        Ok(SearchGraph { nodes, edges })
    }

    /// Shortest paths from `start`, at most `max_depth` edges; parent links
    /// for witness extraction. BFS explores nodes in index order, so the
    /// first chain found on ties is declaration order.
    fn bfs(&self, start: usize, max_depth: usize) -> Vec<Option<(usize, usize, usize)>> {
        // parent[j] = (distance, predecessor node, generator index)
        let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; self.nodes.len()];
        let mut queue = VecDeque::new();
        queue.push_back((start, 0usize));
        while let Some((i, depth)) = queue.pop_front() {
            if depth == max_depth {
                continue;
            }
            for (j, slot) in parent.iter_mut().enumerate() {
                if j == start || slot.is_some() {
                    continue;
                }
                if let Some(k) = self.edges[i][j] {
                    *slot = Some((depth + 1, i, k));
                    queue.push_back((j, depth + 1));
                }
            }
        }
        parent
    }

    fn witness(&self, parent: &[Option<(usize, usize, usize)>], start: usize, target: usize) -> ChainWitness {
        let mut rev_primes = vec![self.nodes[target].clone()];
        let mut rev_gens = Vec::new();
        let mut cur = target;
        while cur != start {
            let (_, pred, gen) = parent[cur].expect("reached node has a parent");
            rev_gens.push(gen);
            rev_primes.push(self.nodes[pred].clone());
            cur = pred;
            if cur == start {
                break;
            }
        }
        rev_primes.reverse();
        rev_gens.reverse();
        ChainWitness {
            primes: rev_primes,
            generator_indices: rev_gens,
        }
    }
}

/// Breadth-first search over `{start} ∪ candidates` along the single-step
/// relation; returns every reachable candidate (in declaration order) with
/// a shortest witness chain of at most `max_depth` steps. A candidate equal
/// to `start` is reachable only through an actual edge (e.g. a self-loop
/// through an identity generator).
pub fn equiv_reachable(
    start: &PrimeIdeal,
    candidates: &[PrimeIdeal],
    datum: &HCDatum,
    max_depth: usize,
) -> Result<Vec<(PrimeIdeal, ChainWitness)>> {
    if max_depth < 1 {
        return Err(Error::InvalidArgument("max_depth must be at least 1".into()));
    }
    check_same_coheight(start, candidates)?;

    // Node 0 is the start; deduplicated candidates follow in declaration order.
    let mut nodes = vec![start.clone()];
    let mut candidate_index = Vec::new();
    for c in candidates {
        match nodes[1..].iter().position(|n| n == c) {
            Some(idx) => candidate_index.push(idx + 1),
            None => {
                nodes.push(c.clone());
                candidate_index.push(nodes.len() - 1);
            }
        }
    }

    let graph = SearchGraph::build(datum, nodes)?;
    let parent = graph.bfs(0, max_depth);

    let mut out = Vec::new();
    let mut seen = Vec::new();
    for &idx in &candidate_index {
        if seen.contains(&idx) {
            continue;
        }
        seen.push(idx);
        if parent[idx].is_some() {
            let witness = graph.witness(&parent, 0, idx);
            out.push((graph.nodes[idx].clone(), witness));
        }
    }
    Ok(out)
}

/// The candidates `q` admitting a chain `q = q_0, ..., q_s = p` of at most
/// `max_depth` steps (edges oriented toward `p`), preceded by `p` itself.
/// Any candidate not returned is certified absent from the assassin within
/// this candidate universe and depth bound.
pub fn assassin_bound(
    p: &PrimeIdeal,
    candidates: &[PrimeIdeal],
    datum: &HCDatum,
    max_depth: usize,
) -> Result<Vec<PrimeIdeal>> {
    if max_depth < 1 {
        return Err(Error::InvalidArgument("max_depth must be at least 1".into()));
    }
    check_same_coheight(p, candidates)?;

    let mut nodes = vec![p.clone()];
    let mut candidate_index = Vec::new();
    for c in candidates {
        match nodes.iter().position(|n| n == c) {
            Some(idx) => candidate_index.push(idx),
            None => {
                nodes.push(c.clone());
                candidate_index.push(nodes.len() - 1);
            }
        }
    }

    let graph = SearchGraph::build(datum, nodes)?;
    // Reverse reachability toward node 0: BFS over transposed edges.
    let n = graph.nodes.len();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    dist[0] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(j) = queue.pop_front() {
        let d = dist[j].unwrap();
        if d == max_depth {
            continue;
        }
        for (i, slot) in dist.iter_mut().enumerate() {
            if slot.is_none() && graph.edges[i][j].is_some() {
                *slot = Some(d + 1);
                queue.push_back(i);
            }
        }
    }

    let mut out = vec![p.clone()];
    let mut seen = vec![0usize];
    for &idx in &candidate_index {
        if seen.contains(&idx) {
            continue;
        }
        seen.push(idx);
        if dist[idx].is_some() {
            out.push(graph.nodes[idx].clone());
        }
    }
    Ok(out)
}

/// Bulk tabulation of the single-step relation:
/// `entry[i][j][k] = equiv_u(candidates[i], candidates[j], generators[k])`.
pub fn single_step_matrix(
    candidates: &[PrimeIdeal],
    datum: &HCDatum,
) -> Result<Vec<Vec<Vec<bool>>>> {
    let n = candidates.len();
    let g = datum.generators.len();
    let mut out = vec![vec![vec![false; g]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, generator) in datum.generators.iter().enumerate() {
                out[i][j][k] = equiv_u(&candidates[i], &candidates[j], generator)?;
            }
        }
    }
    Ok(out)
}
