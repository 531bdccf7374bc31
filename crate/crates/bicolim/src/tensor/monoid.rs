use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// The object monoid of a strict tensor category, as a partial finite
/// multiplication table.
///
/// Partiality allows truncated free monoids: a product is undefined when
/// it would leave the tabulated fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectMonoid {
    pub elems: Vec<String>,
    pub unit: usize,
    table: Vec<Vec<Option<usize>>>,
    index: BTreeMap<String, usize>,
}

impl ObjectMonoid {
    /// A total finite monoid. `entries` lists `(a, b, a*b)` by name for
    /// every pair; unit rows may be omitted.
    pub fn finite_table(
        elems: Vec<String>,
        unit: &str,
        entries: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let index: BTreeMap<String, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        if index.len() != elems.len() {
            return Err(Error::DuplicateName("object monoid element".into()));
        }
        let unit = *index
            .get(unit)
            .ok_or_else(|| Error::UnknownObject(unit.to_string()))?;
        let n = elems.len();
        let mut table = vec![vec![None; n]; n];
        for i in 0..n {
            table[unit][i] = Some(i);
            table[i][unit] = Some(i);
        }
        for (a, b, c) in entries {
            let a = *index.get(&a).ok_or(Error::UnknownObject(a.clone()))?;
            let b = *index.get(&b).ok_or(Error::UnknownObject(b.clone()))?;
            let c = *index.get(&c).ok_or(Error::UnknownObject(c.clone()))?;
            table[a][b] = Some(c);
        }
        for a in 0..n {
            for b in 0..n {
                if table[a][b].is_none() {
                    return Err(Error::UndefinedProduct(format!(
                        "{} * {}",
                        elems[a], elems[b]
                    )));
                }
            }
        }
        let m = ObjectMonoid { elems, unit, table, index };
        m.check_associativity()?;
        Ok(m)
    }

    /// A possibly partial finite monoid. As in [`ObjectMonoid::finite_table`],
    /// unit rows may be omitted; any other pair absent from `entries` has an
    /// undefined product.
    pub fn partial_table(
        elems: Vec<String>,
        unit: &str,
        entries: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let index: BTreeMap<String, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        if index.len() != elems.len() {
            return Err(Error::DuplicateName("object monoid element".into()));
        }
        let unit = *index
            .get(unit)
            .ok_or_else(|| Error::UnknownObject(unit.to_string()))?;
        let n = elems.len();
        let mut table = vec![vec![None; n]; n];
        for i in 0..n {
            table[unit][i] = Some(i);
            table[i][unit] = Some(i);
        }
        for (a, b, c) in entries {
            let a = *index.get(&a).ok_or(Error::UnknownObject(a.clone()))?;
            let b = *index.get(&b).ok_or(Error::UnknownObject(b.clone()))?;
            let c = *index.get(&c).ok_or(Error::UnknownObject(c.clone()))?;
            table[a][b] = Some(c);
        }
        let m = ObjectMonoid { elems, unit, table, index };
        m.check_associativity()?;
        Ok(m)
    }

    /// The defined non-unit-row entries of the table, as element names.
    pub fn table_entries(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a == self.unit || b == self.unit {
                    continue;
                }
                if let Some(c) = self.table[a][b] {
                    out.push((
                        self.elems[a].clone(),
                        self.elems[b].clone(),
                        self.elems[c].clone(),
                    ));
                }
            }
        }
        out
    }

    /// The free monoid on `generators`, truncated to words of length at
    /// most `max_len`. Longer products are undefined.
    pub fn free(generators: &[&str], max_len: usize) -> Result<Self> {
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..generators.len() {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let name = |w: &Vec<usize>| -> String {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&g| generators[g]).collect::<Vec<_>>().join("_")
            }
        };
        let elems: Vec<String> = words.iter().map(name).collect();
        let index: BTreeMap<String, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        if index.len() != elems.len() {
            return Err(Error::DuplicateName("free monoid generator".into()));
        }
        let n = elems.len();
        let mut table = vec![vec![None; n]; n];
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if u.len() + v.len() <= max_len {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    table[i][j] = Some(index[&name(&w)]);
                }
            }
        }
        Ok(ObjectMonoid { elems, unit: 0, table, index })
    }

    /// The trivial monoid `{1}`.
    pub fn trivial() -> Self {
        ObjectMonoid::free(&[], 0).unwrap()
    }

    /// The product monoid, with componentwise multiplication. The element
    /// `(x, y)` is named `x+y`; a product is defined when both component
    /// products are.
    pub fn product(a: &ObjectMonoid, b: &ObjectMonoid) -> Self {
        let (na, nb) = (a.len(), b.len());
        let pair = |i: usize, j: usize| i * nb + j;
        let mut elems = Vec::with_capacity(na * nb);
        for i in 0..na {
            for j in 0..nb {
                elems.push(format!("{}+{}", a.elems[i], b.elems[j]));
            }
        }
        let index: BTreeMap<String, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let n = na * nb;
        let mut table = vec![vec![None; n]; n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        if let (Some(i3), Some(j3)) =
                            (a.table[i1][i2], b.table[j1][j2])
                        {
                            table[pair(i1, j1)][pair(i2, j2)] = Some(pair(i3, j3));
                        }
                    }
                }
            }
        }
        ObjectMonoid { elems, unit: pair(a.unit, b.unit), table, index }
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.elems.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.table[a][b].and_then(|ab| self.table[ab][c]);
                    let r = self.table[b][c].and_then(|bc| self.table[a][bc]);
                    if let (Some(l), Some(r)) = (l, r) {
                        if l != r {
                            return Err(Error::Invalid(format!(
                                "object monoid is not associative at ({}, {}, {})",
                                self.elems[a], self.elems[b], self.elems[c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elem(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elems[i]
    }

    /// The product, if defined within the table.
    pub fn prod_opt(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a][b]
    }

    pub fn prod(&self, a: usize, b: usize) -> Result<usize> {
        self.prod_opt(a, b).ok_or_else(|| {
            Error::UndefinedProduct(format!("{} * {}", self.elems[a], self.elems[b]))
        })
    }

    /// Left-associated triple product, if defined.
    pub fn prod3_opt(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        self.prod_opt(a, b).and_then(|ab| self.prod_opt(ab, c))
    }

    /// Whether the defined part of the table commutes.
    pub fn is_commutative(&self) -> bool {
        let n = self.elems.len();
        (0..n).all(|a| (0..n).all(|b| match (self.table[a][b], self.table[b][a]) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }))
    }

    /// Whether a map of element indices is a homomorphism into `other`
    /// wherever the products involved are defined on both sides.
    pub fn is_homomorphism(&self, other: &ObjectMonoid, map: &[usize]) -> bool {
        if map.len() != self.len() || map[self.unit] != other.unit {
            return false;
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if let Some(ab) = self.table[a][b] {
                    match other.prod_opt(map[a], map[b]) {
                        Some(x) if x == map[ab] => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}
