//! Rooted plumbing trees.
//!
//! A [`RootedTree`] is a weighted tree with a distinguished vertex. This module
//! parses and renders the JSON tree format, applies the three elementary moves
//! (twist, extend, merge), reduces trees, decomposes them into a [`BuildPlan`]
//! of elementary moves, and computes the intersection form, its determinant and
//! signature, and the continued-fraction slope [`r_star`].

use crate::error::{Error, Result};
use crate::rational::Slope;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

/// A vertex id together with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vertex {
    pub id: String,
    pub weight: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeDoc {
    vertices: Vec<Vertex>,
    edges: Vec<[String; 2]>,
    root: String,
}

/// Weighted tree with a distinguished root vertex.
///
/// Vertices keep their input order; that order is the canonical vertex order
/// used for tie-breaking throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    root: usize,
    adj: Vec<Vec<usize>>,
}

/// Parses and validates a JSON tree document.
pub fn parse_tree(text: &str) -> Result<RootedTree> {
    let doc: TreeDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let edges = doc
        .edges
        .into_iter()
        .map(|[a, b]| (a, b))
        .collect::<Vec<_>>();
    RootedTree::new(doc.vertices, edges, &doc.root)
}

impl RootedTree {
    /// Validates the parts and builds a tree.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(String, String)>, root: &str) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Malformed("no vertices".into()));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(Error::DuplicateId(v.id.clone()));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in &edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::UnknownEndpoint(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::UnknownEndpoint(b.clone()))?;
            idx_edges.push((ia, ib));
        }
        let root = *index
            .get(root)
            .ok_or_else(|| Error::UnknownRoot(root.to_string()))?;
        let mut uf = UnionFind::new(vertices.len());
        for (k, &(a, b)) in idx_edges.iter().enumerate() {
            if !uf.union(a, b) {
                let (ea, eb) = &edges[k];
                return Err(Error::Cycle(ea.clone(), eb.clone()));
            }
        }
        let components = vertices.len() - idx_edges.len();
        if components != 1 {
            return Err(Error::Disconnected(components));
        }
        Ok(Self::from_indices(vertices, idx_edges, root))
    }

    pub(crate) fn from_indices(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>, root: usize) -> Self {
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        RootedTree {
            vertices,
            edges,
            root,
            adj,
        }
    }

    /// One-vertex tree.
    pub fn single(id: &str, weight: i64) -> Self {
        Self::from_indices(
            vec![Vertex {
                id: id.to_string(),
                weight,
            }],
            Vec::new(),
            0,
        )
    }

    /// Convenience constructor from `(id, weight)` pairs and id pairs.
    pub fn from_spec(vertices: &[(&str, i64)], edges: &[(&str, &str)], root: &str) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|&(id, weight)| Vertex {
                    id: id.to_string(),
                    weight,
                })
                .collect(),
            edges
                .iter()
                .map(|&(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            root,
        )
    }

    /// Renders the JSON tree format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("tree serialization is infallible")
    }

    /// JSON value of the tree format.
    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_doc()).expect("tree serialization is infallible")
    }

    fn to_doc(&self) -> TreeDoc {
        TreeDoc {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.vertices[a].id.clone(), self.vertices[b].id.clone()])
                .collect(),
            root: self.vertices[self.root].id.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_id(&self) -> &str {
        &self.vertices[self.root].id
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.vertices[v].weight
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Same tree rooted at vertex `v`.
    pub fn with_root(&self, v: usize) -> Self {
        let mut t = self.clone();
        t.root = v;
        t
    }

    /// Same tree with the weight of vertex `v` replaced.
    pub fn with_weight(&self, v: usize, weight: i64) -> Self {
        let mut t = self.clone();
        t.vertices[v].weight = weight;
        t
    }

    /// Canonical code of the rooted tree; equal codes iff isomorphic as
    /// weighted rooted trees.
    pub fn canonical_code(&self) -> String {
        self.subtree_code(self.root, None)
    }

    fn subtree_code(&self, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = self.adj[v]
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| self.subtree_code(c, Some(v)))
            .collect();
        kids.sort();
        format!("({}{})", self.vertices[v].weight, kids.concat())
    }

    /// True when the trees agree up to vertex relabeling.
    pub fn is_isomorphic(&self, other: &RootedTree) -> bool {
        self.len() == other.len() && self.canonical_code() == other.canonical_code()
    }

    fn subtree_size(&self, v: usize, parent: Option<usize>) -> usize {
        1 + self.adj[v]
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| self.subtree_size(c, Some(v)))
            .sum::<usize>()
    }

    fn subtree_weights(&self, v: usize, parent: Option<usize>, out: &mut Vec<i64>) {
        out.push(self.vertices[v].weight);
        for &c in &self.adj[v] {
            if Some(c) != parent {
                self.subtree_weights(c, Some(v), out);
            }
        }
    }

    fn fresh_id(&self, stem: &str) -> String {
        let taken: HashSet<&str> = self.vertices.iter().map(|v| v.id.as_str()).collect();
        if !taken.contains(stem) {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}{i}"))
            .find(|c| !taken.contains(c.as_str()))
            .expect("unbounded search")
    }

    /// Adds `m` to the root weight.
    pub fn twist(&self, m: i64) -> RootedTree {
        let mut t = self.clone();
        t.vertices[t.root].weight += m;
        t
    }

    /// Attaches a fresh weight-0 root to the old root.
    pub fn extend(&self) -> RootedTree {
        let id = self.fresh_id("e");
        let mut vertices = self.vertices.clone();
        vertices.push(Vertex { id, weight: 0 });
        let new_root = vertices.len() - 1;
        let mut edges = self.edges.clone();
        edges.push((new_root, self.root));
        Self::from_indices(vertices, edges, new_root)
    }

    /// Identifies the two roots, summing their weights. Colliding ids of
    /// `other` are relabeled.
    pub fn merge(&self, other: &RootedTree) -> RootedTree {
        let mut vertices = self.vertices.clone();
        vertices[self.root].weight += other.weight(other.root);
        let mut taken: HashSet<String> = vertices.iter().map(|v| v.id.clone()).collect();
        let mut map = vec![usize::MAX; other.len()];
        map[other.root] = self.root;
        for (i, v) in other.vertices.iter().enumerate() {
            if i == other.root {
                continue;
            }
            let mut id = v.id.clone();
            while taken.contains(&id) {
                id.push('\'');
            }
            taken.insert(id.clone());
            map[i] = vertices.len();
            vertices.push(Vertex {
                id,
                weight: v.weight,
            });
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (map[a], map[b])));
        Self::from_indices(vertices, edges, self.root)
    }
}

/// Elementary move on rooted trees.
#[derive(Debug, Clone, Copy)]
pub enum Move<'a> {
    Twist(i64),
    Extend,
    Merge(&'a RootedTree),
}

/// Applies an elementary move.
pub fn apply_move(tree: &RootedTree, mv: Move<'_>) -> RootedTree {
    match mv {
        Move::Twist(m) => tree.twist(m),
        Move::Extend => tree.extend(),
        Move::Merge(other) => tree.merge(other),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Expression tree of elementary moves starting from the one-vertex weight-0 tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildPlan {
    Base,
    Twist(i64, Box<BuildPlan>),
    Extend(Box<BuildPlan>),
    Merge(Box<BuildPlan>, Box<BuildPlan>),
}

impl BuildPlan {
    /// Evaluates the plan with tree-level moves.
    pub fn evaluate(&self) -> RootedTree {
        let mut counter = 0usize;
        self.eval_with(&mut counter)
    }

    fn eval_with(&self, counter: &mut usize) -> RootedTree {
        match self {
            BuildPlan::Base => {
                let t = RootedTree::single(&format!("v{counter}"), 0);
                *counter += 1;
                t
            }
            BuildPlan::Twist(m, c) => c.eval_with(counter).twist(*m),
            BuildPlan::Extend(c) => {
                let inner = c.eval_with(counter);
                let mut t = inner.extend();
                let r = t.root;
                t.vertices[r].id = format!("v{counter}");
                *counter += 1;
                t
            }
            BuildPlan::Merge(a, b) => {
                let left = a.eval_with(counter);
                let right = b.eval_with(counter);
                left.merge(&right)
            }
        }
    }

    /// Number of plan nodes.
    pub fn size(&self) -> usize {
        match self {
            BuildPlan::Base => 1,
            BuildPlan::Twist(_, c) | BuildPlan::Extend(c) => 1 + c.size(),
            BuildPlan::Merge(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for BuildPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildPlan::Base => f.write_str("Base"),
            BuildPlan::Twist(m, c) => write!(f, "Twist({m})({c})"),
            BuildPlan::Extend(c) => write!(f, "Extend({c})"),
            BuildPlan::Merge(a, b) => write!(f, "Merge({a}, {b})"),
        }
    }
}

/// Decomposes a tree into elementary moves.
///
/// Children of a weight-0 root are ordered by (subtree size, sorted weight
/// multiset, canonical code) and split left-deep: first child against the rest.
pub fn decompose(tree: &RootedTree) -> BuildPlan {
    plan_at(tree, tree.root, None, tree.weight(tree.root))
}

fn plan_at(tree: &RootedTree, v: usize, parent: Option<usize>, weight: i64) -> BuildPlan {
    if weight != 0 {
        return BuildPlan::Twist(weight, Box::new(plan_at(tree, v, parent, 0)));
    }
    let mut children: Vec<(usize, Vec<i64>, String, usize)> = tree.adj[v]
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| {
            let mut ws = Vec::new();
            tree.subtree_weights(c, Some(v), &mut ws);
            ws.sort_unstable();
            (tree.subtree_size(c, Some(v)), ws, tree.subtree_code(c, Some(v)), c)
        })
        .collect();
    children.sort();
    let order: Vec<usize> = children.into_iter().map(|(_, _, _, c)| c).collect();
    plan_children(tree, v, &order)
}

fn plan_children(tree: &RootedTree, v: usize, children: &[usize]) -> BuildPlan {
    match children {
        [] => BuildPlan::Base,
        [c] => BuildPlan::Extend(Box::new(plan_at(tree, *c, Some(v), tree.weight(*c)))),
        [first, rest @ ..] => BuildPlan::Merge(
            Box::new(plan_children(tree, v, std::slice::from_ref(first))),
            Box::new(plan_children(tree, v, rest)),
        ),
    }
}

/// Result of [`reduce_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceOutcome {
    pub tree: RootedTree,
    /// No non-root vertex of valence one or two has weight 0 or ±1.
    pub reduced: bool,
    /// Ids of non-root vertices that keep the tree from being reduced.
    pub blocking: Vec<String>,
}

/// Applies leaf blow-downs and 0-chain collapses away from the root until
/// neither applies.
pub fn reduce_tree(tree: &RootedTree) -> ReduceOutcome {
    let n = tree.len();
    let mut alive = vec![true; n];
    let mut weight: Vec<i64> = tree.vertices.iter().map(|v| v.weight).collect();
    let mut adj: Vec<BTreeSet<usize>> = tree
        .adj
        .iter()
        .map(|a| a.iter().copied().collect())
        .collect();
    let root = tree.root;
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] || v == root {
                continue;
            }
            let val = adj[v].len();
            if val == 1 && weight[v].abs() == 1 {
                let u = *adj[v].iter().next().expect("valence one");
                weight[u] -= weight[v];
                adj[u].remove(&v);
                adj[v].clear();
                alive[v] = false;
                changed = true;
            } else if val == 2 && weight[v] == 0 {
                let mut it = adj[v].iter().copied();
                let (a, b) = (it.next().expect("two"), it.next().expect("two"));
                let (keep, gone) = if b == root { (b, a) } else { (a, b) };
                adj[keep].remove(&v);
                adj[gone].remove(&v);
                let moved: Vec<usize> = adj[gone].iter().copied().collect();
                for w in moved {
                    adj[w].remove(&gone);
                    adj[w].insert(keep);
                    adj[keep].insert(w);
                }
                weight[keep] += weight[gone];
                adj[gone].clear();
                adj[v].clear();
                alive[v] = false;
                alive[gone] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for v in 0..n {
        if alive[v] {
            map[v] = vertices.len();
            vertices.push(Vertex {
                id: tree.vertices[v].id.clone(),
                weight: weight[v],
            });
        }
    }
    let mut edges = Vec::new();
    for v in 0..n {
        if alive[v] {
            for &w in &adj[v] {
                if v < w {
                    edges.push((map[v], map[w]));
                }
            }
        }
    }
    let reduced_tree = RootedTree::from_indices(vertices, edges, map[root]);
    let blocking: Vec<String> = (0..reduced_tree.len())
        .filter(|&v| {
            v != reduced_tree.root
                && matches!(reduced_tree.valence(v), 1 | 2)
                && reduced_tree.weight(v).abs() <= 1
        })
        .map(|v| reduced_tree.id(v).to_string())
        .collect();
    ReduceOutcome {
        reduced: blocking.is_empty(),
        tree: reduced_tree,
        blocking,
    }
}

/// Intersection form indexed by vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntForm {
    pub ids: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl IntForm {
    pub fn dim(&self) -> usize {
        self.ids.len()
    }
}

/// Weights on the diagonal, 1 for adjacent vertices, 0 elsewhere.
pub fn intersection_form(tree: &RootedTree) -> IntForm {
    let n = tree.len();
    let mut entries = vec![vec![0i64; n]; n];
    for (v, row) in entries.iter_mut().enumerate() {
        row[v] = tree.weight(v);
    }
    for &(a, b) in &tree.edges {
        entries[a][b] = 1;
        entries[b][a] = 1;
    }
    IntForm {
        ids: tree.vertices.iter().map(|v| v.id.clone()).collect(),
        entries,
    }
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant fits in i64")
}

/// Counts of positive, negative and zero entries after congruence
/// diagonalization over the rationals.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    type Q = Ratio<i128>;
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let mut remaining: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    while let Some(&k) = remaining.first() {
        let pivot = if !a[k][k].is_zero() {
            Some(k)
        } else if let Some(&j) = remaining.iter().find(|&&j| !a[j][j].is_zero()) {
            Some(j)
        } else if let Some(&j) = remaining.iter().find(|&&j| !a[k][j].is_zero()) {
            // 2x2 block pivot: add row/column j to row/column k.
            for &i in &remaining {
                let v = a[j][i];
                a[k][i] += v;
            }
            for &i in &remaining {
                let v = a[i][j];
                a[i][k] += v;
            }
            Some(k)
        } else {
            None
        };
        match pivot {
            None => {
                zero += 1;
                remaining.retain(|&i| i != k);
            }
            Some(p) => {
                let d = a[p][p];
                if d.is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                remaining.retain(|&i| i != p);
                for &i in &remaining {
                    let f = a[i][p] / d;
                    if f.is_zero() {
                        continue;
                    }
                    for &j in &remaining {
                        let v = a[p][j];
                        a[i][j] -= f * v;
                    }
                }
            }
        }
    }
    (pos, neg, zero)
}

/// Exact determinant and signature of a symmetric integer form.
pub fn det_and_signature(form: &IntForm) -> (i64, i64) {
    let (p, q, _) = inertia(&form.entries);
    (determinant(&form.entries), p as i64 - q as i64)
}

/// Continued-fraction slope obtained by stripping leaf roots.
///
/// With stripped weights `a_n, ..., a_1` (first stripped first) and final root
/// weight `a_0`, returns `a_0 - 1/(a_1 - 1/(... - 1/a_n))`, evaluated
/// projectively so that a vanishing denominator yields infinity.
pub fn r_star(tree: &RootedTree) -> Slope {
    let (stripped, a0) = strip_leaf_roots(tree);
    // value = p/q, built from the innermost term outward
    let (mut p, mut q) = (1i64, 0i64);
    for &a in stripped.iter().chain(std::iter::once(&a0)) {
        let np = a * p - q;
        q = p;
        p = np;
    }
    Slope::from_pair(p, q)
}

/// Weights `a_n, ..., a_1` of stripped leaf roots (first stripped first) and
/// the weight of the final root.
pub fn strip_leaf_roots(tree: &RootedTree) -> (Vec<i64>, i64) {
    let mut removed = vec![false; tree.len()];
    let mut root = tree.root;
    let mut stripped = Vec::new();
    loop {
        let live: Vec<usize> = tree.adj[root]
            .iter()
            .copied()
            .filter(|&u| !removed[u])
            .collect();
        if live.len() != 1 {
            break;
        }
        stripped.push(tree.weight(root));
        removed[root] = true;
        root = live[0];
    }
    (stripped, tree.weight(root))
}
