//! Cayley graphs of finite direct products of cyclic groups, their exact
//! integer Laplacians, and graph complements.

use num_bigint::BigInt;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("generator set contains the identity element")]
    IdentityGenerator,
    #[error("generator {0:?} has the wrong number of components for the group")]
    GeneratorArity(Vec<u64>),
    #[error("a nontrivial group needs at least one generator")]
    EmptyGenerators,
    #[error("isomorphism search is limited to 10 vertices, got {0}")]
    SizeLimit(usize),
    #[error("cannot parse group spec {0:?}: {1}")]
    Parse(String, String),
}

/// Z_{orders[0]} x ... x Z_{orders[m-1]}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    orders: Vec<u64>,
}

impl GroupSpec {
    pub fn new(orders: Vec<u64>) -> Result<Self, CayleyError> {
        if orders.is_empty() || orders.iter().any(|&o| o == 0) {
            return Err(CayleyError::Parse(
                format!("{orders:?}"),
                "factor orders must be >= 1".into(),
            ));
        }
        Ok(GroupSpec { orders })
    }

    pub fn cyclic(n: u64) -> Self {
        GroupSpec { orders: vec![n] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Group elements as residue tuples, lexicographic.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for prefix in &out {
                for r in 0..o {
                    let mut e = prefix.clone();
                    e.push(r);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// The unit vector of each nontrivial factor, e.g. {1} for Z_n.
    pub fn default_generators(&self) -> GeneratorSet {
        let mut gens = BTreeSet::new();
        for (i, &o) in self.orders.iter().enumerate() {
            if o > 1 {
                let mut g = vec![0; self.orders.len()];
                g[i] = 1;
                gens.insert(g);
            }
        }
        GeneratorSet { generators: gens }
    }

    fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), o)| (a + b) % o)
            .collect()
    }

    fn neg(&self, x: &[u64]) -> Vec<u64> {
        x.iter().zip(&self.orders).map(|(a, o)| (o - a) % o).collect()
    }
}

/// Deduplicated set of non-identity group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    generators: BTreeSet<Vec<u64>>,
}

impl GeneratorSet {
    pub fn new(group: &GroupSpec, gens: Vec<Vec<u64>>) -> Result<Self, CayleyError> {
        let mut generators = BTreeSet::new();
        for g in gens {
            if g.len() != group.orders.len() {
                return Err(CayleyError::GeneratorArity(g));
            }
            let reduced: Vec<u64> = g.iter().zip(&group.orders).map(|(r, o)| r % o).collect();
            if reduced.iter().all(|&r| r == 0) {
                return Err(CayleyError::IdentityGenerator);
            }
            generators.insert(reduced);
        }
        Ok(GeneratorSet { generators })
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.generators.iter()
    }
}

/// Simple undirected graph on vertices 0..vertex_count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>, // always (min, max)
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .filter(|&(_, v)| v < vertex_count)
            .collect();
        Graph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// Exact integer square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::from(0); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Cayley graph: vertices are group elements in lexicographic order, with an
/// edge {g, g*s} for every s in gens and its inverse, collapsed to a simple
/// graph (an order-2 generator contributes a single edge).
pub fn cayley_graph(group: &GroupSpec, gens: &GeneratorSet) -> Result<Graph, CayleyError> {
    if gens.is_empty() && group.order() > 1 {
        return Err(CayleyError::EmptyGenerators);
    }
    let elements = group.elements();
    let index = |e: &[u64]| -> usize {
        let mut idx = 0usize;
        for (r, o) in e.iter().zip(&group.orders) {
            idx = idx * (*o as usize) + *r as usize;
        }
        idx
    };
    let mut edges = BTreeSet::new();
    for g in &elements {
        let gi = index(g);
        for s in gens.generators() {
            for step in [s.clone(), group.neg(s)] {
                let h = group.add(g, &step);
                let hi = index(&h);
                if gi != hi {
                    edges.insert((gi.min(hi), gi.max(hi)));
                }
            }
        }
    }
    Ok(Graph {
        vertex_count: elements.len(),
        edges,
    })
}

/// Degree matrix minus adjacency matrix.
pub fn laplacian_of(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in g.edges() {
        m.set(u, v, BigInt::from(-1));
        m.set(v, u, BigInt::from(-1));
        let du = m.get(u, u) + 1;
        m.set(u, u, du);
        let dv = m.get(v, v) + 1;
        m.set(v, v, dv);
    }
    m
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                edges.insert((u, v));
            }
        }
    }
    Graph {
        vertex_count: n,
        edges,
    }
}

/// Brute-force isomorphism test for graphs on at most 10 vertices.
pub fn isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool, CayleyError> {
    let n = g1.vertex_count();
    if n > 10 || g2.vertex_count() > 10 {
        return Err(CayleyError::SizeLimit(n.max(g2.vertex_count())));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let matches = |perm: &[usize]| {
        g1.edges().all(|(u, v)| g2.has_edge(perm[u], perm[v]))
    };
    // Heap's algorithm over all permutations.
    fn permute(k: usize, perm: &mut Vec<usize>, found: &mut bool, test: &dyn Fn(&[usize]) -> bool) {
        if *found {
            return;
        }
        if k <= 1 {
            if test(perm) {
                *found = true;
            }
            return;
        }
        for i in 0..k {
            permute(k - 1, perm, found, test);
            if *found {
                return;
            }
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let mut found = false;
    permute(n, &mut perm, &mut found, &matches);
    Ok(found)
}

/// Parses "Z6", "Z2xZ3", "Z6[1,2]", "Z2xZ3[(1,0);(0,1)]".
/// Without a generator override the default unit generators apply.
pub fn parse_group_spec(s: &str) -> Result<(GroupSpec, GeneratorSet), CayleyError> {
    let err = |msg: &str| CayleyError::Parse(s.to_string(), msg.to_string());
    let s = s.trim();
    let (group_part, gen_part) = match s.find('[') {
        Some(i) => {
            if !s.ends_with(']') {
                return Err(err("missing closing ']'"));
            }
            (&s[..i], Some(&s[i + 1..s.len() - 1]))
        }
        None => (s, None),
    };
    let mut orders = Vec::new();
    for factor in group_part.split(['x', 'X']) {
        let factor = factor.trim();
        let digits = factor
            .strip_prefix('Z')
            .or_else(|| factor.strip_prefix('z'))
            .ok_or_else(|| err("each factor must look like Z<n>"))?;
        let n: u64 = digits
            .parse()
            .map_err(|_| err("factor order is not a positive integer"))?;
        orders.push(n);
    }
    let group = GroupSpec::new(orders)?;
    let gens = match gen_part {
        None => group.default_generators(),
        Some(text) => {
            let mut gens = Vec::new();
            if group.orders.len() == 1 {
                for item in text.split(',') {
                    let r: u64 = item
                        .trim()
                        .parse()
                        .map_err(|_| err("generator residue is not an integer"))?;
                    gens.push(vec![r]);
                }
            } else {
                for item in text.split(';') {
                    let item = item.trim();
                    let inner = item
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| err("product generators must be tuples like (1,0)"))?;
                    let tuple = inner
                        .split(',')
                        .map(|r| r.trim().parse::<u64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| err("generator residue is not an integer"))?;
                    gens.push(tuple);
                }
            }
            GeneratorSet::new(&group, gens)?
        }
    };
    Ok((group, gens))
}
