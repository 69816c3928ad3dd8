//! Finite groups: enumeration from permutation generators or a Cayley table,
//! conjugacy classes, and the computations built on them.
//!
//! Elements are ids `0..order`, with `0` the identity. Multiplication is a
//! full table lookup, which is all the group orders used here need.

mod burnside;
pub mod corpus;
mod file;
mod perm;
mod vondyck;
mod witness;

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use burnside::{
    b_set, burnside_count_check, count_products, multiplier_set_finite, product_counts, ClassTriple,
};
pub use file::{load_group_file, parse_group_json, GroupFile};
pub use perm::Permutation;
pub use vondyck::{
    conjugate_product_check, universal_witness, vondyck, UniversalWitness, VonDyckRealization,
};
pub use witness::{witness_r_minus_one, RMinusOneWitness};

/// Default bound on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

pub type ElementId = usize;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<ElementId>,
    element_orders: Vec<u64>,
    classes: Vec<Vec<ElementId>>,
    class_index: Vec<usize>,
    permutations: Option<Vec<Permutation>>,
    fingerprint: u64,
}

/// A conjugacy class of a particular [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjClass {
    group: u64,
    index: usize,
    members: Arc<[ElementId]>,
}

impl ConjClass {
    pub fn index(&self) -> usize {
        self.index
    }

    /// Sorted member ids.
    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn representative(&self) -> ElementId {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn group_fingerprint(&self) -> u64 {
        self.group
    }
}

impl FiniteGroup {
    /// Breadth-first closure of the generators under right multiplication.
    /// An empty generator list gives the trivial group.
    pub fn from_permutations(generators: &[Permutation], cap: usize) -> Result<Self> {
        let degree = generators
            .iter()
            .map(Permutation::degree)
            .max()
            .unwrap_or(0);
        let gens: Vec<Permutation> = generators.iter().map(|g| g.extended(degree)).collect();
        let identity = Permutation::identity(degree);
        let mut index: HashMap<Permutation, ElementId> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = elements[x].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::TooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (x, px) in elements.iter().enumerate() {
            for (y, py) in elements.iter().enumerate() {
                table[x * n + y] = index[&px.compose(py)] as u32;
            }
        }
        let mut group = Self::assemble(n, table)?;
        group.permutations = Some(elements);
        Ok(group)
    }

    /// Row-major Cayley table with element `0` the identity.
    pub fn from_table(rows: &[Vec<usize>], cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > cap {
            return Err(Error::TooLarge { cap });
        }
        let mut table = vec![0u32; n * n];
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for (y, &v) in row.iter().enumerate() {
                if v >= n || seen[v] {
                    return Err(Error::InvalidTable(format!(
                        "row {x} is not a permutation of 0..{n}"
                    )));
                }
                seen[v] = true;
                table[x * n + y] = v as u32;
            }
        }
        Self::assemble(n, table)
    }

    fn assemble(n: usize, table: Vec<u32>) -> Result<Self> {
        let at = |x: usize, y: usize| table[x * n + y] as usize;
        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidTable(format!(
                    "element 0 is not an identity for {x}"
                )));
            }
        }
        let inverses = (0..n)
            .map(|x| {
                let inv = (0..n)
                    .find(|&y| at(x, y) == 0)
                    .ok_or_else(|| Error::InvalidTable(format!("{x} has no inverse")))?;
                if at(inv, x) != 0 {
                    return Err(Error::InvalidTable(format!("{x} has no two-sided inverse")));
                }
                Ok(inv)
            })
            .collect::<Result<Vec<_>>>()?;
        // Associativity: exhaustive for small tables, sampled otherwise.
        if n <= 24 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if at(at(x, y), z) != at(x, at(y, z)) {
                            return Err(Error::InvalidTable(format!(
                                "({x}·{y})·{z} != {x}·({y}·{z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ n as u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..4096 {
                let (x, y, z) = (next(), next(), next());
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(Error::InvalidTable(format!(
                        "({x}·{y})·{z} != {x}·({y}·{z})"
                    )));
                }
            }
        }
        let element_orders = (0..n)
            .map(|x| {
                let mut acc = x;
                let mut ord = 1u64;
                while acc != 0 {
                    acc = at(acc, x);
                    ord += 1;
                }
                ord
            })
            .collect();
        let mut class_index = vec![usize::MAX; n];
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for x in 0..n {
            if class_index[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<ElementId> = (0..n).map(|g| at(at(g, x), inverses[g])).collect();
            members.sort_unstable();
            members.dedup();
            for &y in &members {
                class_index[y] = classes.len();
            }
            classes.push(members);
        }
        let mut hasher = DefaultHasher::new();
        table.hash(&mut hasher);
        let fingerprint = hasher.finish();
        Ok(Self {
            order: n,
            table,
            inverses,
            element_orders,
            classes,
            class_index,
            permutations: None,
            fingerprint,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn contains(&self, x: ElementId) -> bool {
        x < self.order
    }

    pub fn check_element(&self, x: ElementId) -> Result<ElementId> {
        if x < self.order {
            Ok(x)
        } else {
            Err(Error::InvalidLetter {
                id: x,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: ElementId) -> ElementId {
        self.inverses[x]
    }

    /// Product of a sequence, left to right.
    pub fn product<I: IntoIterator<Item = ElementId>>(&self, xs: I) -> ElementId {
        xs.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    /// `x^e` for any integer `e`.
    pub fn pow(&self, x: ElementId, e: i64) -> ElementId {
        let ord = self.element_orders[x] as i64;
        let e = e.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conj(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        self.product([x, y, self.inv(x), self.inv(y)])
    }

    pub fn element_order(&self, x: ElementId) -> u64 {
        self.element_orders[x]
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Classes ordered by least member; class 0 is `{identity}`.
    pub fn classes(&self) -> Vec<ConjClass> {
        (0..self.classes.len()).map(|i| self.class(i)).collect()
    }

    pub fn class(&self, index: usize) -> ConjClass {
        ConjClass {
            group: self.fingerprint,
            index,
            members: Arc::from(self.classes[index].as_slice()),
        }
    }

    pub fn class_index_of(&self, x: ElementId) -> usize {
        self.class_index[x]
    }

    pub fn class_of(&self, x: ElementId) -> ConjClass {
        self.class(self.class_index[x])
    }

    /// Index of `C^s = {c^s : c ∈ C}`.
    pub fn class_power_index(&self, index: usize, s: i64) -> usize {
        self.class_index[self.pow(self.classes[index][0], s)]
    }

    pub fn class_power(&self, class: &ConjClass, s: i64) -> Result<ConjClass> {
        self.check_class(class)?;
        Ok(self.class(self.class_power_index(class.index, s)))
    }

    pub(crate) fn check_class(&self, class: &ConjClass) -> Result<()> {
        if class.group != self.fingerprint {
            return Err(Error::MixedGroups);
        }
        Ok(())
    }

    /// Smallest subgroup containing `gens`, as a sorted id list.
    pub fn generated_subgroup(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn permutation(&self, x: ElementId) -> Option<&Permutation> {
        self.permutations.as_ref().map(|p| &p[x])
    }

    /// Cycle notation when the group came from permutations, `#id` otherwise.
    pub fn label(&self, x: ElementId) -> String {
        match self.permutation(x) {
            Some(p) => p.to_string(),
            None => format!("#{x}"),
        }
    }

    /// Element id of a permutation, for permutation groups.
    pub fn find_permutation(&self, p: &Permutation) -> Option<ElementId> {
        let perms = self.permutations.as_ref()?;
        let degree = perms.first().map(Permutation::degree).unwrap_or(0);
        if p.degree() > degree {
            return None;
        }
        let p = p.extended(degree);
        perms.iter().position(|q| *q == p)
    }
}
