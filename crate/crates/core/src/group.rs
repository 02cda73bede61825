//! Finite groups as Cayley tables, and the correspondence with sharp
//! geometries: `(x, y, z) ∈ Δ ⇔ xyz = e`, and back via `x·y = (the unique
//! c with (x, y, c) ∈ Δ)#`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, GroupTableError};
use crate::geometry::Geometry;
use crate::triples::TripleSet;

/// A multiplication table `rows[x][y] = x·y` with element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    labels: Vec<String>,
    rows: Vec<Vec<usize>>,
}

/// Identity and inverses of a table that passed [`CayleyTable::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInfo {
    pub identity: usize,
    pub inverses: Vec<usize>,
}

impl CayleyTable {
    /// Wraps a table without checking the group axioms.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Self {
        Self { labels, rows }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.rows[x][y]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Checks shape, closure, identity, inverses and associativity.
    pub fn validate(&self) -> Result<GroupInfo, GroupTableError> {
        let n = self.rows.len();
        if n == 0 {
            return Err(GroupTableError::Empty);
        }
        if self.labels.len() != n {
            return Err(GroupTableError::LabelCount { labels: self.labels.len(), n });
        }
        let mut sorted: Vec<&String> = self.labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GroupTableError::DuplicateLabel(w[0].clone()));
        }
        for (row, r) in self.rows.iter().enumerate() {
            if r.len() != n {
                return Err(GroupTableError::NotSquare { row, len: r.len(), n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupTableError::OutOfRange { row, col, value });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Err(GroupTableError::NotAssociative { witness: [x, y, z] });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
            .ok_or(GroupTableError::NoIdentity)?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| self.mul(x, y) == identity && self.mul(y, x) == identity)
                    .ok_or(GroupTableError::NoInverse(x))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupInfo { identity, inverses })
    }

    /// `Z_n` with labels `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let rows = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        Self { labels, rows }
    }

    /// `Z_n` with caller-chosen labels, element `i` being `i` times the generator.
    pub fn cyclic_labeled(labels: &[&str]) -> Self {
        let mut t = Self::cyclic(labels.len());
        t.labels = labels.iter().map(|l| l.to_string()).collect();
        t
    }

    /// The Klein four-group `{e, a, b, c}` with `ab = c`.
    pub fn klein() -> Self {
        let labels = ["e", "a", "b", "c"].iter().map(|l| l.to_string()).collect();
        let rows = (0..4usize).map(|x| (0..4usize).map(|y| x ^ y).collect()).collect();
        Self { labels, rows }
    }

    /// The symmetric group on `{1..n}`: permutations in lexicographic order of
    /// their image lists, labelled in cycle notation (`e`, `(12)`, `(123)`, ...).
    /// The product `στ` applies `τ` first.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let rows = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self { labels, rows }
    }

    /// Smallest subgroup containing `generators`.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Result<Vec<usize>, GroupTableError> {
        let info = self.validate()?;
        Ok(self.closure(info.identity, generators))
    }

    fn closure(&self, identity: usize, generators: &[usize]) -> Vec<usize> {
        let mut members: BTreeSet<usize> = BTreeSet::new();
        members.insert(identity);
        let mut frontier: Vec<usize> = vec![identity];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        members.into_iter().collect()
    }

    /// Every subgroup, each as a sorted index list, ordered by size then contents.
    pub fn subgroups(&self) -> Result<Vec<Vec<usize>>, GroupTableError> {
        let info = self.validate()?;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![vec![info.identity]];
        found.insert(vec![info.identity]);
        while let Some(h) = queue.pop() {
            for g in 0..self.order() {
                if h.binary_search(&g).is_err() {
                    let mut gens = h.clone();
                    gens.push(g);
                    let bigger = self.closure(info.identity, &gens);
                    if found.insert(bigger.clone()) {
                        queue.push(bigger);
                    }
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Checks that `subset` is a subgroup (nonempty, closed, inverses).
    pub fn check_subgroup(&self, subset: &[usize]) -> Result<(), Error> {
        let info = self.validate()?;
        let n = self.order();
        if let Some(&bad) = subset.iter().find(|&&h| h >= n) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        if !set.contains(&info.identity) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &x in &set {
            if !set.contains(&info.inverses[x]) {
                return Err(Error::NotSubgroup(format!("inverse of {} missing", self.labels[x])));
            }
            for &y in &set {
                if !set.contains(&self.mul(x, y)) {
                    return Err(Error::NotSubgroup(format!(
                        "not closed: {}*{} = {}",
                        self.labels[x],
                        self.labels[y],
                        self.labels[self.mul(x, y)]
                    )));
                }
            }
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut label = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        label.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            label.push_str(&(i + 1).to_string());
            i = p[i];
        }
        label.push(')');
    }
    if label.is_empty() {
        label.push('e');
    }
    label
}

/// The sharp geometry of a group: `(x, y, z) ∈ Δ ⇔ xyz = e`.
pub fn from_group_table(table: &CayleyTable) -> Result<Geometry, Error> {
    let info = table.validate()?;
    let n = table.order();
    // For each (x, y) the unique completing z is (xy)⁻¹; emitted in sorted order.
    let triples = (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let delta = TripleSet::collect_dedup(n, triples.map(|(x, y)| [x, y, info.inverses[table.mul(x, y)]]));
    Ok(Geometry::from_parts(table.labels.clone(), info.identity, delta)?)
}

/// The group of a sharp geometry: `x·y` is the single element of `x * y`.
pub fn to_group_table(g: &Geometry) -> Result<CayleyTable, Error> {
    let n = g.len();
    let inv = g.involution_table().ok_or_else(|| {
        let element = (0..n).find(|&a| g.involution(a).is_err()).unwrap_or(0);
        let candidates = (0..n).filter(|&b| g.contains(element, b, g.identity())).count();
        Error::NoInvolution { element, candidates }
    })?;
    let mut rows = vec![vec![0; n]; n];
    for (x, row) in rows.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            let mut slice = g.slice(x, y);
            match (slice.next(), slice.next()) {
                (Some(c), None) => *cell = inv[c],
                _ => return Err(Error::NotSharp),
            }
        }
    }
    Ok(CayleyTable { labels: g.labels().to_vec(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn z2_table_gives_four_triples() {
        let g = from_group_table(&CayleyTable::cyclic_labeled(&["e", "a"])).unwrap();
        assert_eq!(g.delta().as_slice(), &[[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert_eq!(g, fixtures::z2());
    }

    #[test]
    fn z3_has_nine_triples() {
        let g = from_group_table(&CayleyTable::cyclic_labeled(&["e", "a", "b"])).unwrap();
        assert_eq!(g.delta().len(), 9);
        assert!(g.is_sharp());
        assert!(g.validate_axioms().all_pass());
    }

    #[test]
    fn broken_associativity_is_named() {
        // a loop of order 5 that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let t = CayleyTable::new((0..5).map(|i| i.to_string()).collect(), rows);
        let err = from_group_table(&t).unwrap_err();
        assert!(matches!(err, Error::Group(GroupTableError::NotAssociative { .. })));
        assert!(err.to_string().starts_with("not associative"));
        let Error::Group(GroupTableError::NotAssociative { witness: [x, y, z] }) = err else { unreachable!() };
        assert_ne!(t.mul(t.mul(x, y), z), t.mul(x, t.mul(y, z)));
    }

    #[test]
    fn other_table_errors() {
        let t = CayleyTable::new(vec!["e".into(), "a".into()], vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(t.validate(), Err(GroupTableError::NoIdentity));
        let t = CayleyTable::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(t.validate(), Err(GroupTableError::NoInverse(1)));
        let t = CayleyTable::new(vec!["e".into()], vec![vec![3]]);
        assert!(matches!(t.validate(), Err(GroupTableError::OutOfRange { .. })));
    }

    #[test]
    fn to_group_table_cases() {
        let z4 = fixtures::z4();
        assert_eq!(to_group_table(&z4).unwrap(), CayleyTable::cyclic(4));
        assert_eq!(to_group_table(&fixtures::sign()), Err(Error::NotSharp));
        let t = to_group_table(&fixtures::trivial()).unwrap();
        assert_eq!(t.rows(), &[vec![0]]);
    }

    #[test]
    fn symmetric_group_labels() {
        let s3 = CayleyTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.labels(), &["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        let t12 = s3.index_of("(12)").unwrap();
        let c = s3.index_of("(123)").unwrap();
        assert_eq!(s3.labels()[s3.mul(s3.mul(t12, c), t12)], "(132)");
        assert_eq!(CayleyTable::symmetric(4).subgroups().unwrap().len(), 30);
        assert_eq!(s3.subgroups().unwrap().len(), 6);
    }

    #[test]
    fn subgroup_checks() {
        let s3 = CayleyTable::symmetric(3);
        let t12 = s3.index_of("(12)").unwrap();
        assert!(s3.check_subgroup(&[0, t12]).is_ok());
        assert!(matches!(s3.check_subgroup(&[t12]), Err(Error::NotSubgroup(_))));
        let c = s3.index_of("(123)").unwrap();
        assert!(matches!(s3.check_subgroup(&[0, c]), Err(Error::NotSubgroup(_))));
    }
}
