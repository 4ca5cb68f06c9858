//! Finite groups by multiplication table.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    /// `table[a][b] = a·b`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let g = GroupSpec { name: name.into(), table, identity };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let bad = |m: &str| Err(Error::Invalid(format!("group {}: {m}", self.name)));
        if n == 0 || self.identity >= n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("malformed table");
        }
        for a in 0..n {
            if self.table[self.identity][a] != a || self.table[a][self.identity] != a {
                return bad("identity law");
            }
            if !(0..n).any(|b| self.table[a][b] == self.identity) {
                return bad("missing inverse");
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("associativity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("validated group")
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupSpec { name: format!("C{n}"), table, identity: 0 }
    }

    pub fn product(a: &GroupSpec, b: &GroupSpec) -> Self {
        let (n, m) = (a.order(), b.order());
        let table =
            (0..n * m).map(|x| (0..n * m).map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).collect()).collect();
        GroupSpec { name: format!("{}x{}", a.name, b.name), table, identity: a.identity * m + b.identity }
    }

    /// Group of permutations given as images of `0..k`, closed under composition.
    pub fn from_permutations(name: &str, generators: &[Vec<usize>]) -> Self {
        let k = generators[0].len();
        let id: Vec<usize> = (0..k).collect();
        let mut elems = vec![id.clone()];
        let mut i = 0;
        while i < elems.len() {
            for g in generators {
                let h: Vec<usize> = (0..k).map(|x| g[elems[i][x]]).collect();
                if !elems.contains(&h) {
                    elems.push(h);
                }
            }
            i += 1;
        }
        elems.sort();
        let pos = |p: &Vec<usize>| elems.iter().position(|e| e == p).expect("closed");
        let table =
            elems.iter().map(|a| elems.iter().map(|b| pos(&(0..k).map(|x| a[b[x]]).collect())).collect()).collect();
        GroupSpec { name: name.into(), table, identity: pos(&id) }
    }

    pub fn symmetric3() -> Self {
        GroupSpec::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn dihedral4() -> Self {
        GroupSpec::from_permutations("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    /// Quaternion group as permutations of its own eight elements.
    pub fn quaternion() -> Self {
        // elements ±1, ±i, ±j, ±k encoded as (sign, unit) with unit in {1,i,j,k}
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (neg, u) = unit_mul(a % 4, b % 4);
                        let sign = (a / 4) ^ (b / 4) ^ usize::from(neg);
                        sign * 4 + u
                    })
                    .collect()
            })
            .collect();
        GroupSpec { name: "Q8".into(), table, identity: 0 }
    }

    /// Every subgroup, each as a sorted element list, in a fixed order.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out: Vec<Vec<usize>> = Vec::new();
        // generated by at most two elements covers every group used here
        for a in 0..n {
            for b in a..n {
                let s = self.generated(&[a, b]);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
        out
    }

    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut s = vec![self.identity];
        let mut i = 0;
        while i < s.len() {
            for &g in gens {
                let h = self.mul(s[i], g);
                if !s.contains(&h) {
                    s.push(h);
                }
            }
            i += 1;
        }
        s.sort_unstable();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_groups_validate() {
        for g in [GroupSpec::cyclic(5), GroupSpec::symmetric3(), GroupSpec::dihedral4(), GroupSpec::quaternion()] {
            g.validate().unwrap();
        }
        assert_eq!(GroupSpec::symmetric3().order(), 6);
        assert_eq!(GroupSpec::dihedral4().order(), 8);
        let k4 = GroupSpec::product(&GroupSpec::cyclic(2), &GroupSpec::cyclic(2));
        k4.validate().unwrap();
        assert_eq!(k4.subgroups().len(), 5);
    }

    #[test]
    fn bad_table_rejected() {
        assert!(GroupSpec::new("x", vec![vec![0, 1], vec![1, 1]], 0).is_err());
    }
}
