//! McKay graphs of the finite subgroups of `SL(2, C)`.
//!
//! The adjacency `a_ij = dim Hom(rho_i, Q (x) rho_j)` is computed from the
//! character table as `(1/|G|) sum_c |c| chi_Q(c) chi_j(c) conj(chi_i(c))`.
//! Cyclic and binary dihedral tables are generated; the binary tetrahedral,
//! octahedral and icosahedral tables are shipped as data and validated by
//! the orthogonality relations before use.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::cartan_matrix;
use crate::error::{Error, Result};
use crate::scalars::{CycNum, Rational};

/// ADE label of a finite subgroup of `SL(2, C)` and of its rational double point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdeLabel {
    /// Cyclic group of order `n + 1`.
    A(usize),
    /// Binary dihedral group of order `4(n - 2)`, `n >= 4`.
    D(usize),
    E6,
    E7,
    E8,
}

impl AdeLabel {
    pub fn rank(self) -> usize {
        match self {
            AdeLabel::A(n) | AdeLabel::D(n) => n,
            AdeLabel::E6 => 6,
            AdeLabel::E7 => 7,
            AdeLabel::E8 => 8,
        }
    }

    pub fn group_order(self) -> u64 {
        match self {
            AdeLabel::A(n) => n as u64 + 1,
            AdeLabel::D(n) => 4 * (n as u64 - 2),
            AdeLabel::E6 => 24,
            AdeLabel::E7 => 48,
            AdeLabel::E8 => 120,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            AdeLabel::A(0) => Err(Error::InvalidInput("A_n needs n >= 1".into())),
            AdeLabel::D(n) if n < 4 => Err(Error::InvalidInput("D_n needs n >= 4".into())),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeLabel::A(n) => write!(f, "A{n}"),
            AdeLabel::D(n) => write!(f, "D{n}"),
            AdeLabel::E6 => write!(f, "E6"),
            AdeLabel::E7 => write!(f, "E7"),
            AdeLabel::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for AdeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let bad = || Error::Parse(format!("unknown ADE label '{s}'"));
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let k: usize = tail.parse().map_err(|_| bad())?;
        match (head.to_ascii_uppercase().as_str(), k) {
            ("A", n) => AdeLabel::A(n).validate(),
            ("D", n) => AdeLabel::D(n).validate(),
            ("E", 6) => Ok(AdeLabel::E6),
            ("E", 7) => Ok(AdeLabel::E7),
            ("E", 8) => Ok(AdeLabel::E8),
            _ => Err(bad()),
        }
    }
}

/// Defining polynomial of the rational double point `C^2 / G`.
pub fn ade_equation(label: AdeLabel) -> Result<String> {
    Ok(match label.validate()? {
        AdeLabel::A(n) => format!("x*y - z^{}", n + 1),
        AdeLabel::D(n) => format!("x^2 + y^2*z + z^{}", n - 1),
        AdeLabel::E6 => "x^2 + y^3 + z^4".into(),
        AdeLabel::E7 => "x^2 + y^3 + y*z^3".into(),
        AdeLabel::E8 => "x^2 + y^3 + z^5".into(),
    })
}

/// Order of the automorphism group of the (finite) Dynkin diagram.
pub fn diagram_automorphisms(label: AdeLabel) -> Result<u64> {
    Ok(match label.validate()? {
        AdeLabel::A(1) => 1,
        AdeLabel::A(_) => 2,
        AdeLabel::D(4) => 6,
        AdeLabel::D(_) => 2,
        AdeLabel::E6 => 2,
        AdeLabel::E7 | AdeLabel::E8 => 1,
    })
}

/// Character table of a finite subgroup of `SL(2, C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub label: AdeLabel,
    pub class_sizes: Vec<u64>,
    /// `characters[i][c]`; row 0 is the trivial character, column 0 the identity.
    pub characters: Vec<Vec<CycNum>>,
    /// Character of the natural representation `Q = C^2`.
    pub natural: Vec<CycNum>,
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn dimensions(&self) -> Result<Vec<u64>> {
        self.characters
            .iter()
            .map(|row| {
                row[0]
                    .as_rational()
                    .filter(|d| d.is_integer() && d > &Rational::zero())
                    .and_then(|d| u64::try_from(d.to_integer()).ok())
                    .ok_or_else(|| Error::CorruptedTable("character degree is not a positive integer".into()))
            })
            .collect()
    }

    /// Checks shape, `sum dim^2 = |G|` and both orthogonality relations.
    pub fn validate(&self) -> Result<()> {
        let k = self.class_sizes.len();
        let g = self.order();
        if g != self.label.group_order() {
            return Err(Error::CorruptedTable(format!(
                "class sizes sum to {g}, expected {}",
                self.label.group_order()
            )));
        }
        if self.characters.len() != k || self.characters.iter().any(|r| r.len() != k) {
            return Err(Error::CorruptedTable("character table is not square".into()));
        }
        if self.natural.len() != k {
            return Err(Error::CorruptedTable("natural character has the wrong length".into()));
        }
        let dims = self.dimensions()?;
        if dims.iter().map(|d| d * d).sum::<u64>() != g {
            return Err(Error::CorruptedTable("sum of squared degrees differs from |G|".into()));
        }
        if self.natural[0] != CycNum::from_int(2) {
            return Err(Error::CorruptedTable("natural representation must have degree 2".into()));
        }
        let gq = CycNum::from_int(g as i64);
        for i in 0..k {
            for j in 0..k {
                let mut row = CycNum::from_int(0);
                for c in 0..k {
                    let term = self.characters[i][c].clone() * self.characters[j][c].conj();
                    row = row + term.scale(&Rational::from_integer(self.class_sizes[c].into()));
                }
                let expected = if i == j { gq.clone() } else { CycNum::from_int(0) };
                if row != expected {
                    return Err(Error::CorruptedTable(format!("rows {i} and {j} are not orthogonal")));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut col = CycNum::from_int(0);
                for row in &self.characters {
                    col = col + row[c].clone() * row[d].conj();
                }
                let expected = if c == d {
                    CycNum::from_rational(Rational::new(g.into(), self.class_sizes[c].into()))
                } else {
                    CycNum::from_int(0)
                };
                if col != expected {
                    return Err(Error::CorruptedTable(format!("columns {c} and {d} are not orthogonal")));
                }
            }
        }
        Ok(())
    }
}

fn zeta(n: u64, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k).expect("small conductor")
}

fn int(v: i64) -> CycNum {
    CycNum::from_int(v)
}

/// `Z_m` acting on `C^2` by `diag(zeta, zeta^{-1})`.
pub fn cyclic_group(m: usize) -> Result<GroupSpec> {
    if m < 2 {
        return Err(Error::InvalidInput("cyclic group needs order >= 2".into()));
    }
    let mm = m as u64;
    let characters: Vec<Vec<CycNum>> = (0..m)
        .map(|j| (0..m).map(|c| zeta(mm, (j * c) as i64)).collect())
        .collect();
    let natural = (0..m)
        .map(|c| characters[1][c].clone() + characters[m - 1][c].clone())
        .collect();
    Ok(GroupSpec {
        label: AdeLabel::A(m - 1),
        class_sizes: vec![1; m],
        characters,
        natural,
    })
}

/// Binary dihedral group of order `4(n-2)`.
///
/// Classes: `1, a^k a^{-k} (k = 1..m-1), a^m, b, ab` with `m = n - 2`.
pub fn binary_dihedral_group(n: usize) -> Result<GroupSpec> {
    AdeLabel::D(n).validate()?;
    let m = n - 2;
    let two_m = 2 * m as u64;
    let mut class_sizes = vec![1u64];
    class_sizes.extend(std::iter::repeat_n(2, m - 1));
    class_sizes.extend([1, m as u64, m as u64]);

    let one_dim = |a: CycNum, b: CycNum| -> Vec<CycNum> {
        let mut row = vec![int(1)];
        for k in 1..m {
            row.push(a.pow(k as u64));
        }
        row.push(a.pow(m as u64));
        row.push(b.clone());
        row.push(a * b);
        row
    };
    let i = CycNum::i();
    let mut characters = vec![one_dim(int(1), int(1)), one_dim(int(1), int(-1))];
    if m.is_multiple_of(2) {
        characters.push(one_dim(int(-1), int(1)));
        characters.push(one_dim(int(-1), int(-1)));
    } else {
        characters.push(one_dim(int(-1), i.clone()));
        characters.push(one_dim(int(-1), -i));
    }
    for j in 1..m {
        let mut row = vec![int(2)];
        for k in 1..m {
            let e = (j * k) as i64;
            row.push(zeta(two_m, e) + zeta(two_m, -e));
        }
        row.push(int(if j % 2 == 0 { 2 } else { -2 }));
        row.push(int(0));
        row.push(int(0));
        characters.push(row);
    }
    Ok(GroupSpec {
        label: AdeLabel::D(n),
        natural: characters[4].clone(),
        class_sizes,
        characters,
    })
}

/// Binary tetrahedral group, order 24.
///
/// Classes: `1, -1, order 4 (6), -x (4), -x^2 (4), x (4), x^2 (4)` with `x`
/// of order 3.
pub fn binary_tetrahedral_group() -> GroupSpec {
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    let (one, zero) = (int(1), int(0));
    let characters = vec![
        vec![one.clone(); 7],
        vec![one.clone(), one.clone(), one.clone(), w.clone(), w2.clone(), w.clone(), w2.clone()],
        vec![one.clone(), one.clone(), one.clone(), w2.clone(), w.clone(), w2.clone(), w.clone()],
        vec![int(2), int(-2), zero.clone(), int(1), int(1), int(-1), int(-1)],
        vec![int(2), int(-2), zero.clone(), w.clone(), w2.clone(), -w.clone(), -w2.clone()],
        vec![int(2), int(-2), zero.clone(), w2.clone(), w.clone(), -w2, -w],
        vec![int(3), int(3), int(-1), zero.clone(), zero.clone(), zero.clone(), zero],
    ];
    GroupSpec {
        label: AdeLabel::E6,
        class_sizes: vec![1, 1, 6, 4, 4, 4, 4],
        natural: characters[3].clone(),
        characters,
    }
}

/// Binary octahedral group, order 48.
///
/// Classes: `1, -1, order 4 in 2T (6), order 8 (6), order 8 (6), order 3 (8),
/// order 6 (8), order 4 outside 2T (12)`.
pub fn binary_octahedral_group() -> GroupSpec {
    let r2 = zeta(8, 1) - zeta(8, 3);
    let rows: Vec<Vec<CycNum>> = vec![
        [1, 1, 1, 1, 1, 1, 1, 1].map(int).to_vec(),
        [1, 1, 1, -1, -1, 1, 1, -1].map(int).to_vec(),
        [2, 2, 2, 0, 0, -1, -1, 0].map(int).to_vec(),
        [3, 3, -1, 1, 1, 0, 0, -1].map(int).to_vec(),
        [3, 3, -1, -1, -1, 0, 0, 1].map(int).to_vec(),
        vec![int(2), int(-2), int(0), r2.clone(), -r2.clone(), int(-1), int(1), int(0)],
        vec![int(2), int(-2), int(0), -r2.clone(), r2, int(-1), int(1), int(0)],
        [4, -4, 0, 0, 0, 1, -1, 0].map(int).to_vec(),
    ];
    GroupSpec {
        label: AdeLabel::E7,
        class_sizes: vec![1, 1, 6, 6, 6, 8, 8, 12],
        natural: rows[5].clone(),
        characters: rows,
    }
}

/// Binary icosahedral group, order 120, with the golden ratio written in
/// `Q(zeta_5)`: `phi = 1 + zeta5 + zeta5^4`, `phi' = 1 - phi`.
///
/// Classes: `1, -1, order 4 (30), order 6 (20), order 3 (20), order 10 (12),
/// order 10 (12), order 5 (12), order 5 (12)`.
pub fn binary_icosahedral_group() -> GroupSpec {
    let phi = int(1) + zeta(5, 1) + zeta(5, 4);
    let psi = int(1) + zeta(5, 2) + zeta(5, 3);
    let (p, q) = (phi.clone(), psi.clone());
    let rows = vec![
        vec![int(1); 9],
        vec![int(2), int(-2), int(0), int(1), int(-1), p.clone(), q.clone(), -q.clone(), -p.clone()],
        vec![int(2), int(-2), int(0), int(1), int(-1), q.clone(), p.clone(), -p.clone(), -q.clone()],
        vec![int(3), int(3), int(-1), int(0), int(0), p.clone(), q.clone(), q.clone(), p.clone()],
        vec![int(3), int(3), int(-1), int(0), int(0), q.clone(), p.clone(), p.clone(), q.clone()],
        [4, 4, 0, 1, 1, -1, -1, -1, -1].map(int).to_vec(),
        [5, 5, 1, -1, -1, 0, 0, 0, 0].map(int).to_vec(),
        [4, -4, 0, -1, 1, 1, 1, -1, -1].map(int).to_vec(),
        [6, -6, 0, 0, 0, -1, -1, 1, 1].map(int).to_vec(),
    ];
    GroupSpec {
        label: AdeLabel::E8,
        class_sizes: vec![1, 1, 30, 20, 20, 12, 12, 12, 12],
        natural: rows[1].clone(),
        characters: rows,
    }
}

/// Character table for a label: `A_n` gives `Z_{n+1}`, `D_n` the binary
/// dihedral group, `E_k` the binary polyhedral groups.
pub fn group_spec(label: AdeLabel) -> Result<GroupSpec> {
    let spec = match label.validate()? {
        AdeLabel::A(n) => cyclic_group(n + 1)?,
        AdeLabel::D(n) => binary_dihedral_group(n)?,
        AdeLabel::E6 => binary_tetrahedral_group(),
        AdeLabel::E7 => binary_octahedral_group(),
        AdeLabel::E8 => binary_icosahedral_group(),
    };
    Ok(spec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub dim: u64,
}

/// Undirected multigraph on irreducible representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: Vec<Vertex>,
    pub adjacency: Vec<Vec<u64>>,
}

impl Graph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `(i, j, multiplicity)` with `i <= j`.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i..self.len() {
                if self.adjacency[i][j] > 0 {
                    out.push((self.vertices[i].id, self.vertices[j].id, self.adjacency[i][j]));
                }
            }
        }
        out
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.adjacency[i].iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.len() {
                if self.adjacency[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `2 I - A` applied to the dimension vector.
    pub fn dimension_defect(&self) -> Vec<i64> {
        (0..self.len())
            .map(|i| {
                let a: i64 = (0..self.len())
                    .map(|j| self.adjacency[i][j] as i64 * self.vertices[j].dim as i64)
                    .sum();
                2 * self.vertices[i].dim as i64 - a
            })
            .collect()
    }

    /// Deletes the vertex with the given id.
    pub fn without(&self, id: usize) -> Graph {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.vertices[i].id != id).collect();
        Graph {
            vertices: keep.iter().map(|&i| self.vertices[i].clone()).collect(),
            adjacency: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.adjacency[i][j]).collect())
                .collect(),
        }
    }

    /// True if `perm[i]` (position in `other`) maps this graph onto `other`.
    pub fn matches_under(&self, other: &Graph, perm: &[usize]) -> bool {
        self.len() == other.len()
            && perm.len() == self.len()
            && (0..self.len()).all(|i| {
                (0..self.len()).all(|j| self.adjacency[i][j] == other.adjacency[perm[i]][perm[j]])
            })
    }

    /// Number of adjacency-preserving vertex permutations, by backtracking.
    pub fn automorphism_count(&self) -> u64 {
        fn extend(g: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> u64 {
            let i = perm.len();
            if i == g.len() {
                return 1;
            }
            let mut total = 0;
            for c in 0..g.len() {
                if used[c] || g.degree(c) != g.degree(i) {
                    continue;
                }
                if (0..i).all(|j| g.adjacency[i][j] == g.adjacency[c][perm[j]])
                    && g.adjacency[i][i] == g.adjacency[c][c]
                {
                    used[c] = true;
                    perm.push(c);
                    total += extend(g, perm, used);
                    perm.pop();
                    used[c] = false;
                }
            }
            total
        }
        extend(self, &mut Vec::new(), &mut vec![false; self.len()])
    }
}

/// McKay graph, including the trivial representation (vertex 0).
pub fn mckay_graph(spec: &GroupSpec) -> Result<Graph> {
    spec.validate()?;
    let k = spec.class_sizes.len();
    let natural = &spec.natural;
    let dims = spec.dimensions()?;
    let g = Rational::from_integer(spec.order().into());
    let mut adjacency = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = CycNum::from_int(0);
            for c in 0..k {
                let t = natural[c].clone() * spec.characters[j][c].clone() * spec.characters[i][c].conj();
                acc = acc + t.scale(&Rational::from_integer(spec.class_sizes[c].into()));
            }
            let v = acc
                .as_rational()
                .map(|r| r / &g)
                .filter(|r| r.is_integer() && r >= &Rational::zero())
                .ok_or_else(|| Error::CorruptedTable(format!("a_{i}{j} is not a non-negative integer")))?;
            adjacency[i][j] = u64::try_from(v.to_integer())
                .map_err(|_| Error::CorruptedTable("adjacency too large".into()))?;
        }
    }
    Ok(Graph {
        vertices: dims.into_iter().enumerate().map(|(id, dim)| Vertex { id, dim }).collect(),
        adjacency,
    })
}

/// McKay graph minus the trivial representation.
pub fn resolution_graph(spec: &GroupSpec) -> Result<Graph> {
    Ok(mckay_graph(spec)?.without(0))
}

/// Finite and affine simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
    AffineA(usize),
    AffineD(usize),
    AffineE(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::AffineA(n) => write!(f, "~A{n}"),
            DynkinType::AffineD(n) => write!(f, "~D{n}"),
            DynkinType::AffineE(n) => write!(f, "~E{n}"),
        }
    }
}

/// Recognizes connected simply-laced (affine) Dynkin diagrams by shape.
pub fn classify(g: &Graph) -> Option<DynkinType> {
    let v = g.len();
    if v == 0 || !g.is_connected() || !g.is_symmetric() || (0..v).any(|i| g.adjacency[i][i] != 0) {
        return None;
    }
    if v == 2 && g.adjacency[0][1] == 2 {
        return Some(DynkinType::AffineA(1));
    }
    if g.adjacency.iter().flatten().any(|&a| a > 1) {
        return None;
    }
    let edges: u64 = (0..v).map(|i| g.degree(i)).sum::<u64>() / 2;
    let deg: Vec<u64> = (0..v).map(|i| g.degree(i)).collect();
    if edges as usize == v {
        return deg.iter().all(|&d| d == 2).then_some(DynkinType::AffineA(v - 1));
    }
    if edges as usize + 1 != v {
        return None;
    }
    let branch: Vec<usize> = (0..v).filter(|&i| deg[i] >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(v)),
        [c] if deg[*c] == 4 => (v == 5).then_some(DynkinType::AffineD(4)),
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = (0..v)
                .filter(|&w| g.adjacency[*c][w] > 0)
                .map(|w| arm_length(g, *c, w))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(DynkinType::D(v)),
                [1, 2, 2] => Some(DynkinType::E(6)),
                [1, 2, 3] => Some(DynkinType::E(7)),
                [1, 2, 4] => Some(DynkinType::E(8)),
                [2, 2, 2] => Some(DynkinType::AffineE(6)),
                [1, 3, 3] => Some(DynkinType::AffineE(7)),
                [1, 2, 5] => Some(DynkinType::AffineE(8)),
                _ => None,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |c: usize| (0..v).filter(|&w| g.adjacency[c][w] > 0 && deg[w] == 1).count();
            (leaves(*a) == 2 && leaves(*b) == 2).then_some(DynkinType::AffineD(v - 1))
        }
        _ => None,
    }
}

/// Number of vertices on the arm leaving `center` through `first`.
fn arm_length(g: &Graph, center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    loop {
        let next: Vec<usize> = (0..g.len()).filter(|&w| w != prev && g.adjacency[cur][w] > 0).collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// The extended diagram expected for a label.
pub fn expected_affine_type(label: AdeLabel) -> DynkinType {
    match label {
        AdeLabel::A(n) => DynkinType::AffineA(n),
        AdeLabel::D(n) => DynkinType::AffineD(n),
        AdeLabel::E6 => DynkinType::AffineE(6),
        AdeLabel::E7 => DynkinType::AffineE(7),
        AdeLabel::E8 => DynkinType::AffineE(8),
    }
}

pub fn expected_finite_type(label: AdeLabel) -> DynkinType {
    match label {
        AdeLabel::A(n) => DynkinType::A(n),
        AdeLabel::D(n) => DynkinType::D(n),
        AdeLabel::E6 => DynkinType::E(6),
        AdeLabel::E7 => DynkinType::E(7),
        AdeLabel::E8 => DynkinType::E(8),
    }
}

fn graph_from_edges(v: usize, edges: &[(usize, usize)], dims: &[u64]) -> Graph {
    let mut adjacency = vec![vec![0; v]; v];
    for &(a, b) in edges {
        adjacency[a][b] += 1;
        adjacency[b][a] += 1;
    }
    Graph {
        vertices: dims.iter().enumerate().map(|(id, &dim)| Vertex { id, dim }).collect(),
        adjacency,
    }
}

/// Reference extended Dynkin diagram with its stored vertex matching: the
/// McKay vertex `i` corresponds to template vertex `matching[i]`.
pub struct Template {
    pub graph: Graph,
    pub matching: Vec<usize>,
}

pub fn template(label: AdeLabel) -> Result<Template> {
    Ok(match label.validate()? {
        AdeLabel::A(1) => Template {
            graph: Graph {
                vertices: vec![Vertex { id: 0, dim: 1 }, Vertex { id: 1, dim: 1 }],
                adjacency: vec![vec![0, 2], vec![2, 0]],
            },
            matching: vec![0, 1],
        },
        AdeLabel::A(n) => {
            let edges: Vec<_> = (0..=n).map(|i| (i, (i + 1) % (n + 1))).collect();
            Template {
                graph: graph_from_edges(n + 1, &edges, &vec![1; n + 1]),
                matching: (0..=n).collect(),
            }
        }
        // ~D_n: leaves 0, 1 on vertex 4, chain 4-5-...-n, leaves 2, 3 on vertex n.
        // The generated table lists the one-dimensional characters first, so
        // the matching is the identity.
        AdeLabel::D(n) => {
            let mut edges = vec![(0, 4), (1, 4), (2, n), (3, n)];
            edges.extend((4..n).map(|k| (k, k + 1)));
            let mut dims = vec![1; 4];
            dims.extend(std::iter::repeat_n(2, n - 3));
            Template {
                graph: graph_from_edges(n + 1, &edges, &dims),
                matching: (0..=n).collect(),
            }
        }
        // ~E6: centre 6 (dim 3), arms 6-3-0 (2,1), 6-4-1, 6-5-2
        AdeLabel::E6 => Template {
            graph: graph_from_edges(7, &[(6, 3), (3, 0), (6, 4), (4, 1), (6, 5), (5, 2)], &[1, 1, 1, 2, 2, 2, 3]),
            matching: (0..7).collect(),
        },
        // ~E7 as a chain 0-1-2-3-4-5-6 with 7 hanging off 3
        AdeLabel::E7 => Template {
            graph: graph_from_edges(
                8,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
                &[1, 2, 3, 4, 3, 2, 1, 2],
            ),
            matching: vec![0, 6, 7, 2, 4, 1, 5, 3],
        },
        // ~E8 as a chain 0-1-...-7 with 8 hanging off 5
        AdeLabel::E8 => Template {
            graph: graph_from_edges(
                9,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
                &[1, 2, 3, 4, 5, 6, 4, 2, 3],
            ),
            matching: vec![0, 1, 7, 2, 8, 6, 4, 3, 5],
        },
    })
}

/// Summary used by the command line and the examples.
#[derive(Clone, Debug)]
pub struct McKayReport {
    pub label: AdeLabel,
    pub graph: Graph,
    pub verdict: Option<DynkinType>,
    pub expected: DynkinType,
    pub equation: String,
    pub automorphisms: u64,
}

pub fn mckay_report(label: AdeLabel, resolution: bool) -> Result<McKayReport> {
    let spec = group_spec(label)?;
    let graph = if resolution {
        resolution_graph(&spec)?
    } else {
        mckay_graph(&spec)?
    };
    Ok(McKayReport {
        label,
        verdict: classify(&graph),
        expected: if resolution {
            expected_finite_type(label)
        } else {
            expected_affine_type(label)
        },
        equation: ade_equation(label)?,
        automorphisms: diagram_automorphisms(label)?,
        graph,
    })
}

/// `2 I - A` of a resolution graph, to be compared with `-c_n`.
pub fn negated_cartan_from_graph(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.len())
        .map(|i| {
            (0..g.len())
                .map(|j| if i == j { 2 } else { 0 } - g.adjacency[i][j] as i64)
                .collect()
        })
        .collect()
}

pub fn a_type_cartan_check(n: usize) -> Result<bool> {
    let g = resolution_graph(&cyclic_group(n + 1)?)?;
    let neg: Vec<Vec<i64>> = cartan_matrix(n)?
        .into_iter()
        .map(|r| r.into_iter().map(|x| -x).collect())
        .collect();
    Ok(negated_cartan_from_graph(&g) == neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels() -> Vec<AdeLabel> {
        let mut v: Vec<AdeLabel> = (1..=8).map(AdeLabel::A).collect();
        v.extend((4..=8).map(AdeLabel::D));
        v.extend([AdeLabel::E6, AdeLabel::E7, AdeLabel::E8]);
        v
    }

    #[test]
    fn tables_validate() {
        for l in labels() {
            group_spec(l).unwrap().validate().unwrap_or_else(|e| panic!("{l}: {e}"));
        }
    }

    #[test]
    fn corrupted_table_rejected() {
        let mut s = binary_tetrahedral_group();
        s.characters[6][2] = int(1);
        assert!(matches!(s.validate(), Err(Error::CorruptedTable(_))));
        assert!(mckay_graph(&s).is_err());
    }

    #[test]
    fn cyclic_graphs() {
        let g = mckay_graph(&cyclic_group(2).unwrap()).unwrap();
        assert_eq!(g.adjacency, vec![vec![0, 2], vec![2, 0]]);
        assert_eq!(classify(&g), Some(DynkinType::AffineA(1)));
        for m in 3..=9 {
            let g = mckay_graph(&cyclic_group(m).unwrap()).unwrap();
            assert_eq!(classify(&g), Some(DynkinType::AffineA(m - 1)));
            let r = resolution_graph(&cyclic_group(m).unwrap()).unwrap();
            assert_eq!(classify(&r), Some(DynkinType::A(m - 1)));
        }
        let r = resolution_graph(&cyclic_group(2).unwrap()).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r.edges().is_empty());
    }

    #[test]
    fn quaternion_graph() {
        let g = mckay_graph(&binary_dihedral_group(4).unwrap()).unwrap();
        assert_eq!(classify(&g), Some(DynkinType::AffineD(4)));
        assert_eq!(g.vertices[4].dim, 2);
        assert_eq!(g.degree(4), 4);
        let r = resolution_graph(&binary_dihedral_group(4).unwrap()).unwrap();
        assert_eq!(classify(&r), Some(DynkinType::D(4)));
    }

    #[test]
    fn all_graphs() {
        for l in labels() {
            let spec = group_spec(l).unwrap();
            let g = mckay_graph(&spec).unwrap();
            assert!(g.is_symmetric() && g.is_connected(), "{l}");
            assert!(g.dimension_defect().iter().all(|&d| d == 0), "{l}");
            assert_eq!(classify(&g), Some(expected_affine_type(l)), "{l}");
            let r = resolution_graph(&spec).unwrap();
            assert_eq!(classify(&r), Some(expected_finite_type(l)), "{l}");
            let t = template(l).unwrap();
            assert!(g.matches_under(&t.graph, &t.matching), "{l}");
            for (i, v) in g.vertices.iter().enumerate() {
                assert_eq!(v.dim, t.graph.vertices[t.matching[i]].dim, "{l} vertex {i}");
            }
            assert_eq!(r.automorphism_count(), diagram_automorphisms(l).unwrap(), "{l}");
        }
    }

    #[test]
    fn a_type_matches_cartan() {
        for n in 1..=8 {
            assert!(a_type_cartan_check(n).unwrap());
        }
    }

    #[test]
    fn equations() {
        assert_eq!(ade_equation(AdeLabel::A(3)).unwrap(), "x*y - z^4");
        assert_eq!(ade_equation(AdeLabel::E8).unwrap(), "x^2 + y^3 + z^5");
        assert_eq!(ade_equation(AdeLabel::D(4)).unwrap(), "x^2 + y^2*z + z^3");
        assert_eq!(ade_equation(AdeLabel::E7).unwrap(), "x^2 + y^3 + y*z^3");
        assert!(ade_equation(AdeLabel::D(3)).is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("A5".parse::<AdeLabel>().unwrap(), AdeLabel::A(5));
        assert_eq!("d_4".parse::<AdeLabel>().unwrap(), AdeLabel::D(4));
        assert_eq!("E8".parse::<AdeLabel>().unwrap(), AdeLabel::E8);
        assert!("E9".parse::<AdeLabel>().is_err());
        assert!("A0".parse::<AdeLabel>().is_err());
    }
}
