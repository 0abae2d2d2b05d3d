use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Perm;
use crate::error::{AlgebraError, Result};

/// Index of an element in its group's element list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub usize);

/// Groups up to this order have associativity checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

/// A finite group given by its Cayley table, together with a permutation
/// action `g ↦ action(g)` on `{1, …, degree}`.
///
/// The action is a right action: `action(gh) = action(g)·action(h)` with
/// left-to-right composition.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    action: Vec<Perm>,
}

impl Group {
    /// Validates the table and attaches the right regular action.
    pub fn from_cayley(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::InvalidGroup("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::InvalidGroup(format!("cayley table must be {n}x{n}")));
        }
        for (i, row) in table.iter().enumerate() {
            if Perm::from_images(row.clone()).is_err() {
                return Err(AlgebraError::InvalidGroup(format!("row {} is not a permutation of the elements", i + 1)));
            }
        }
        for j in 0..n {
            let col: Vec<usize> = table.iter().map(|row| row[j]).collect();
            if Perm::from_images(col).is_err() {
                return Err(AlgebraError::InvalidGroup(format!("column {} is not a permutation of the elements", j + 1)));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| AlgebraError::InvalidGroup("no identity element".into()))?;
        check_associative(&table)?;
        let inverses = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity).unwrap())
            .collect();
        let mut labels = labels;
        let mut seen = HashMap::new();
        for (i, l) in labels.iter_mut().enumerate() {
            if let Some(prev) = seen.insert(l.clone(), i) {
                return Err(AlgebraError::InvalidGroup(format!(
                    "duplicate label {l:?} at {} and {}",
                    prev + 1,
                    i + 1
                )));
            }
        }
        let mut g = Group { name: name.into(), labels, table, identity, inverses, action: Vec::new() };
        g.action = g.regular_representation();
        Ok(g)
    }

    /// The group generated by closing `generators` under composition, acting
    /// through the permutations themselves.
    pub fn from_permutations(name: impl Into<String>, generators: &[Perm]) -> Result<Group> {
        let degree = generators.first().map(Perm::degree).unwrap_or(0);
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, gen) in generators.iter().enumerate() {
                let next = elements[i].compose(gen)?;
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    let mut w = words[i].clone();
                    w.push(k);
                    words.push(w);
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b).unwrap()]).collect())
            .collect();
        let labels = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|k| format!("T{}", k + 1)).collect::<Vec<_>>().join(" ")
                }
            })
            .collect();
        Group::from_cayley(name, labels, table)?.with_action(elements)
    }

    /// Replaces the action; it must be a homomorphism into permutations of
    /// one common degree.
    pub fn with_action(mut self, action: Vec<Perm>) -> Result<Group> {
        if action.len() != self.order() {
            return Err(AlgebraError::InvalidGroup(format!(
                "action lists {} permutations for a group of order {}",
                action.len(),
                self.order()
            )));
        }
        let degree = action[0].degree();
        if let Some(p) = action.iter().find(|p| p.degree() != degree) {
            return Err(AlgebraError::DegreeMismatch { expected: degree, found: p.degree() });
        }
        for g in 0..self.order() {
            for h in 0..self.order() {
                let gh = self.table[g][h];
                if action[gh] != action[g].compose(&action[h])? {
                    return Err(AlgebraError::InvalidGroup(format!(
                        "action is not a homomorphism at ({}, {})",
                        self.labels[g], self.labels[h]
                    )));
                }
            }
        }
        self.action = action;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    /// Cyclic group of order `n` with elements `1, g, g^2, …` labelled by
    /// the given generator name.
    pub fn cyclic_with_generator(n: usize, generator: &str) -> Result<Group> {
        if n == 0 {
            return Err(AlgebraError::UnsupportedGroup("cyclic(0)".into()));
        }
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{k}"),
            })
            .collect();
        Self::cyclic_with_labels(labels)
    }

    pub fn cyclic_with_labels(labels: Vec<String>) -> Result<Group> {
        let n = labels.len();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Group::from_cayley(format!("C{n}"), labels, table)
    }

    /// `C_n` generated by `S` (by `h` when `n = 2`).
    pub fn cyclic(n: usize) -> Result<Group> {
        Self::cyclic_with_generator(n, if n == 2 { "h" } else { "S" })
    }

    /// The Klein four group `{1, A, B, C}` with `AB = C`.
    pub fn klein4() -> Group {
        let labels = ["1", "A", "B", "C"].map(String::from).to_vec();
        let table = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        Group::from_cayley("klein4", labels, table).expect("klein table is valid")
    }

    fn symmetric_elements(n: usize) -> Result<Group> {
        if !(1..=6).contains(&n) {
            return Err(AlgebraError::UnsupportedGroup(format!("symmetric({n}); supported sizes are 1..=6")));
        }
        if n == 1 {
            return Group::from_cayley("S1", vec!["1".into()], vec![vec![0]]);
        }
        let gens: Vec<Perm> = (1..n).map(|k| Perm::adjacent_transposition(n, k)).collect::<Result<_>>()?;
        Group::from_permutations(format!("S{n}"), &gens)
    }

    /// `S_n` acting on itself by right multiplication (degree `n!`).
    pub fn symmetric(n: usize) -> Result<Group> {
        let g = Self::symmetric_elements(n)?;
        let regular = g.regular_representation();
        g.with_action(regular)
    }

    /// `S_n` acting naturally on `{1, …, n}`.
    pub fn symmetric_natural(n: usize) -> Result<Group> {
        Ok(Self::symmetric_elements(n)?.with_name(format!("S{n}nat")))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Degree of the permutation action (length of coefficient vectors).
    pub fn degree(&self) -> usize {
        self.action[0].degree()
    }

    pub fn identity(&self) -> Elem {
        Elem(self.identity)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: Elem) -> &str {
        &self.labels[g.0]
    }

    pub fn find(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem)
    }

    pub fn cayley_table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.0][b.0])
    }

    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.0])
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(acc, base))
    }

    pub fn action(&self, g: Elem) -> &Perm {
        &self.action[g.0]
    }

    pub fn element_for_perm(&self, p: &Perm) -> Option<Elem> {
        self.action.iter().position(|q| q == p).map(Elem)
    }

    /// `ρ(g)` with `g_i ρ(g) = g_i g`.
    pub fn regular_representation(&self) -> Vec<Perm> {
        let n = self.order();
        (0..n)
            .map(|g| Perm::from_images((0..n).map(|i| self.table[i][g]).collect()).unwrap())
            .collect()
    }

    pub fn has_regular_action(&self) -> bool {
        self.action == self.regular_representation()
    }

    /// Cells `(i, i·g)` not covered, and covered more than once, by the
    /// action's permutation matrices (1-based).
    pub fn tiling_defects(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let n = self.degree();
        let mut hits = vec![vec![0u32; n]; n];
        for p in &self.action {
            for i in 0..n {
                hits[i][p.apply(i)] += 1;
            }
        }
        let mut uncovered = Vec::new();
        let mut overlapping = Vec::new();
        for (i, row) in hits.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                match h {
                    0 => uncovered.push((i + 1, j + 1)),
                    1 => {}
                    _ => overlapping.push((i + 1, j + 1)),
                }
            }
        }
        (uncovered, overlapping)
    }

    /// True when the action matrices partition the `degree × degree` grid.
    pub fn action_tiles(&self) -> bool {
        let (u, o) = self.tiling_defects();
        u.is_empty() && o.is_empty()
    }

    fn check_degree<T>(&self, a: &[T]) -> Result<()> {
        if a.len() != self.degree() {
            return Err(AlgebraError::DegreeMismatch { expected: self.degree(), found: a.len() });
        }
        Ok(())
    }

    /// The vector `a↷g` with `diag(a)·M_g = M_g·diag(a↷g)`: moving a
    /// vector from the left of `g` to its right. Entry `i·g` of the result
    /// is `a_i`, so `[b, c]↷η = [c, b]` and `[x, y, z]↷S = [z, x, y]`.
    pub fn vector_act<T: Clone>(&self, a: &[T], g: Elem) -> Result<Vec<T>> {
        self.check_degree(a)?;
        let p = self.action(g);
        let mut out = a.to_vec();
        for (i, x) in a.iter().enumerate() {
            out[p.apply(i)] = x.clone();
        }
        Ok(out)
    }

    /// The vector `b^g = (b_{1g}, …, b_{ng})`, satisfying
    /// `M_g·diag(b) = diag(b^g)·M_g`: moving a vector from the right of `g`
    /// to its left. This is the twist in `(ag)(bh) = a·b^g·(gh)`.
    pub fn slide_left<T: Clone>(&self, b: &[T], g: Elem) -> Result<Vec<T>> {
        self.check_degree(b)?;
        let p = self.action(g);
        Ok((0..b.len()).map(|i| b[p.apply(i)].clone()).collect())
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            name: Some(self.name.clone()),
            elements: self.labels.clone(),
            cayley: self.table.clone(),
            action: if self.has_regular_action() { None } else { Some(self.action.clone()) },
        }
    }

    pub fn from_json(json: GroupJson) -> Result<Group> {
        let g = Group::from_cayley(json.name.unwrap_or_else(|| "custom".into()), json.elements, json.cayley)?;
        match json.action {
            Some(action) => g.with_action(action),
            None => Ok(g),
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {}, degree {})", self.name, self.order(), self.degree())
    }
}

/// JSON form: `{"elements": [...], "cayley": [[...]]}` with 0-based
/// indices into `elements`, plus an optional `action` of 1-based image
/// arrays (regular action when absent).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Perm>>,
}

fn check_associative(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
    let fail = |a: usize, b: usize, c: usize| {
        AlgebraError::InvalidGroup(format!("not associative at ({}, {}, {})", a + 1, b + 1, c + 1))
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(fail(a, b, c));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..10 * n * n {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !assoc(a, b, c) {
                return Err(fail(a, b, c));
            }
        }
    }
    Ok(())
}

/// Resolves a builtin group name: `C<n>` / `cyclic(n)`, `klein4` / `V4`,
/// `S<n>` / `symmetric(n)` (regular action), `S<n>nat` /
/// `symmetric(n,natural)` (natural action).
pub fn builtin_group(name: &str) -> Result<Group> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let unsupported = || AlgebraError::UnsupportedGroup(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unsupported());
    if key == "klein4" || key == "v4" || key == "klein" {
        return Ok(Group::klein4());
    }
    if let Some(inner) = key.strip_prefix("cyclic(").and_then(|s| s.strip_suffix(')')) {
        return Group::cyclic(num(inner)?);
    }
    if let Some(inner) = key.strip_prefix("symmetric(").and_then(|s| s.strip_suffix(')')) {
        return match inner.split_once(',') {
            Some((n, "natural")) => Group::symmetric_natural(num(n)?),
            Some(_) => Err(unsupported()),
            None => Group::symmetric(num(inner)?),
        };
    }
    if let Some(rest) = key.strip_prefix('c') {
        return Group::cyclic(num(rest)?);
    }
    if let Some(rest) = key.strip_prefix('s') {
        return match rest.strip_suffix("nat") {
            Some(n) => Group::symmetric_natural(num(n)?),
            None => Group::symmetric(num(rest)?),
        };
    }
    Err(unsupported())
}
