//! Relative Wu sets over F₂, Wu types, Δμ̄ and μ̄ of closed plumbings.
//!
//! A relative Wu set of a rooted tree is a vertex set `S` with
//! `Q(S, w) ≡ n_w (mod 2)` at every non-root vertex `w`. It is balanced when
//! the same congruence holds at the root, and has type 1 when it contains the
//! root.

use crate::error::{Error, Result};
use crate::plumbing::{det_and_signature, intersection_form, RootedTree};
use crate::words::HstType;
use serde::Serialize;

/// Free-variable count above which enumeration is refused.
pub const MAX_FREE_VARIABLES: usize = 24;

/// A relative Wu set with its flags. `members` are vertex indices in vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelWuSet {
    pub members: Vec<usize>,
    pub ids: Vec<String>,
    /// 1 iff the root is a member.
    #[serde(rename = "type")]
    pub kind: u8,
    pub balanced: bool,
}

impl RelWuSet {
    /// Sum of the weights of the members.
    pub fn weight_sum(&self, tree: &RootedTree) -> i64 {
        self.members.iter().map(|&v| tree.weight(v)).sum()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// Census `(#balanced type 0, #balanced type 1, #unbalanced type 0,
/// #unbalanced type 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WuType(pub usize, pub usize, pub usize, pub usize);

impl WuType {
    pub fn as_tuple(self) -> (usize, usize, usize, usize) {
        (self.0, self.1, self.2, self.3)
    }

    /// Homology solid torus type for the three two-set census values.
    pub fn hst_type(self) -> HstType {
        match self.as_tuple() {
            (1, 1, 0, 0) => HstType::Alpha,
            (1, 0, 1, 0) => HstType::Beta,
            (0, 1, 1, 0) => HstType::AlphaBeta,
            _ => HstType::None,
        }
    }

    /// True for `(k,k,0,0)`, `(k,0,k,0)` or `(0,k,k,0)` with `k` a power of two.
    pub fn is_admissible(self) -> bool {
        let k = match self.as_tuple() {
            (a, b, 0, 0) if a == b => a,
            (a, 0, c, 0) if a == c => a,
            (0, b, c, 0) if b == c => b,
            _ => return false,
        };
        k.is_power_of_two()
    }
}

/// Parity of `Q(S, w) + n_w` for a membership vector.
fn defect(tree: &RootedTree, x: &[bool], w: usize) -> bool {
    let mut s = x[w] && tree.weight(w).rem_euclid(2) == 1;
    for &u in tree.neighbors(w) {
        s ^= x[u];
    }
    s ^ (tree.weight(w).rem_euclid(2) == 1)
}

/// True when `Q(S, w) ≡ n_w (mod 2)`.
pub fn satisfies_at(tree: &RootedTree, members: &[usize], w: usize) -> bool {
    let mut x = vec![false; tree.len()];
    for &v in members {
        x[v] = true;
    }
    !defect(tree, &x, w)
}

/// Dense F₂ row over the vertex columns plus a right-hand side.
#[derive(Clone)]
struct Row {
    bits: Vec<u64>,
    rhs: bool,
}

impl Row {
    fn get(&self, j: usize) -> bool {
        self.bits[j / 64] >> (j % 64) & 1 == 1
    }

    fn flip(&mut self, j: usize) {
        self.bits[j / 64] ^= 1 << (j % 64);
    }

    fn xor(&mut self, o: &Row) {
        for (a, b) in self.bits.iter_mut().zip(&o.bits) {
            *a ^= b;
        }
        self.rhs ^= o.rhs;
    }
}

/// Solution space of the relative Wu equations: a particular solution and a
/// basis of the kernel, one vector per free column in vertex order.
fn solve(tree: &RootedTree) -> (Vec<bool>, Vec<Vec<bool>>) {
    let n = tree.len();
    let words = n.div_ceil(64);
    let mut rows: Vec<Row> = (0..n)
        .filter(|&w| w != tree.root())
        .map(|w| {
            let mut r = Row {
                bits: vec![0; words],
                rhs: tree.weight(w).rem_euclid(2) == 1,
            };
            if r.rhs {
                r.flip(w);
            }
            for &u in tree.neighbors(w) {
                r.flip(u);
            }
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(p) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(next, p);
        let pivot = rows[next].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != next && r.get(col) {
                r.xor(&pivot);
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    assert!(
        rows[next..].iter().all(|r| !r.rhs),
        "relative Wu equations on a tree are consistent"
    );
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut particular = vec![false; n];
    for &(r, c) in &pivots {
        particular[c] = rows[r].rhs;
    }
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![false; n];
            v[f] = true;
            for &(r, c) in &pivots {
                v[c] = rows[r].get(f);
            }
            v
        })
        .collect();
    (particular, basis)
}

/// All relative Wu sets, in Gray-code order over the free variables.
pub fn enumerate_relative_wu(tree: &RootedTree) -> Result<Vec<RelWuSet>> {
    let (mut x, basis) = solve(tree);
    if basis.len() > MAX_FREE_VARIABLES {
        return Err(Error::TooManyWuSets(MAX_FREE_VARIABLES));
    }
    let total = 1usize << basis.len();
    let mut out = Vec::with_capacity(total);
    for i in 0..total {
        if i > 0 {
            let b = &basis[i.trailing_zeros() as usize];
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi ^= bi;
            }
        }
        out.push(to_set(tree, &x));
    }
    for s in out.iter().filter(|s| s.balanced) {
        assert!(
            tree.edges()
                .iter()
                .all(|&(a, b)| !(s.contains(a) && s.contains(b))),
            "balanced relative Wu sets contain no adjacent vertices"
        );
    }
    Ok(out)
}

fn to_set(tree: &RootedTree, x: &[bool]) -> RelWuSet {
    let members: Vec<usize> = (0..tree.len()).filter(|&v| x[v]).collect();
    RelWuSet {
        ids: members.iter().map(|&v| tree.id(v).to_string()).collect(),
        kind: u8::from(x[tree.root()]),
        balanced: !defect(tree, x, tree.root()),
        members,
    }
}

/// Census of a list of relative Wu sets.
pub fn census(sets: &[RelWuSet]) -> WuType {
    let mut t = WuType(0, 0, 0, 0);
    for s in sets {
        match (s.balanced, s.kind) {
            (true, 0) => t.0 += 1,
            (true, _) => t.1 += 1,
            (false, 0) => t.2 += 1,
            (false, _) => t.3 += 1,
        }
    }
    t
}

/// Wu type of a rooted tree.
pub fn wu_type(tree: &RootedTree) -> Result<WuType> {
    Ok(census(&enumerate_relative_wu(tree)?))
}

/// The ordered pair `(S₀, S₁)` of a homology solid torus.
pub fn labeled_pair(tree: &RootedTree) -> Result<(RelWuSet, RelWuSet)> {
    let sets = enumerate_relative_wu(tree)?;
    if sets.len() != 2 {
        return Err(Error::NotZ2SolidTorus(sets.len()));
    }
    let t = census(&sets);
    let is_s1 = |s: &RelWuSet| match t.hst_type() {
        HstType::Beta => s.balanced && s.kind == 0,
        _ => s.balanced && s.kind == 1,
    };
    let (a, b) = (sets[0].clone(), sets[1].clone());
    if is_s1(&a) {
        Ok((b, a))
    } else {
        debug_assert!(is_s1(&b));
        Ok((a, b))
    }
}

/// Σ_{S₁} n − Σ_{S₀} n.
pub fn delta_mubar(tree: &RootedTree) -> Result<i64> {
    let (s0, s1) = labeled_pair(tree)?;
    Ok(s1.weight_sum(tree) - s0.weight_sum(tree))
}

/// Wu sets of the closed plumbing: the balanced relative Wu sets.
pub fn wu_sets_closed(tree: &RootedTree) -> Result<Vec<RelWuSet>> {
    Ok(enumerate_relative_wu(tree)?
        .into_iter()
        .filter(|s| s.balanced)
        .collect())
}

/// μ̄ = σ(Q) − Q(S, S) for a Wu set `S`, given by vertex indices.
pub fn mubar_closed(tree: &RootedTree, members: &[usize]) -> Result<i64> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&v| v >= tree.len())
        || !(0..tree.len()).all(|w| satisfies_at(tree, &sorted, w))
    {
        return Err(Error::NotWuSet);
    }
    let (_, sigma) = det_and_signature(&intersection_form(tree));
    let square: i64 = sorted.iter().map(|&v| tree.weight(v)).sum();
    Ok(sigma - square)
}

/// A leaf lying in exactly one of the two Wu sets; ties go to vertex order.
pub fn choose_type_alpha_root(tree: &RootedTree) -> Result<usize> {
    let sets = wu_sets_closed(tree)?;
    if sets.len() != 2 {
        return Err(Error::WuSetCount(sets.len()));
    }
    (0..tree.len())
        .find(|&v| tree.valence(v) <= 1 && sets[0].contains(v) != sets[1].contains(v))
        .ok_or(Error::WuSetCount(2))
}
