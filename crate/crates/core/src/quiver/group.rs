use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice;

/// An element of `⊕ Z/r_j`, stored as reduced residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub residues: Vec<i64>,
}

/// A finite abelian group `⊕ Z/r_j` acting diagonally on affine n-space,
/// together with the characters `ρ_1..ρ_n` of the coordinate lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupData {
    orders: Vec<i64>,
    /// `weights[j][i]` is the `j`-th residue of `ρ_{i+1}`.
    weights: Vec<Vec<i64>>,
    order: usize,
    dim: usize,
}

impl AbelianGroupData {
    /// Validates the data and checks that the weight characters generate the
    /// whole character group.
    pub fn new(orders: Vec<i64>, weights: Vec<Vec<i64>>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::BadShape("no cyclic factors".into()));
        }
        if let Some(bad) = orders.iter().find(|&&r| r < 1) {
            return Err(Error::BadShape(format!("cyclic order {bad} < 1")));
        }
        if weights.len() != orders.len() {
            return Err(Error::BadShape(format!(
                "{} weight rows for {} cyclic factors",
                weights.len(),
                orders.len()
            )));
        }
        let dim = weights[0].len();
        if dim == 0 || weights.iter().any(|row| row.len() != dim) {
            return Err(Error::BadShape(
                "weight rows must have equal length n >= 1".into(),
            ));
        }
        let weights: Vec<Vec<i64>> = weights
            .iter()
            .zip(&orders)
            .map(|(row, &r)| row.iter().map(|w| w.rem_euclid(r)).collect())
            .collect();
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r as usize))
            .ok_or_else(|| Error::BadShape("group order overflows".into()))?;

        // deg: Z^n -> ⊕ Z/r_j is onto iff the weight columns together with
        // r_j e_j span Z^k.
        let k = orders.len();
        let mut gens: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| (0..k).map(|j| BigInt::from(weights[j][i])).collect())
            .collect();
        for (j, &r) in orders.iter().enumerate() {
            let mut row = vec![BigInt::from(0); k];
            row[j] = BigInt::from(r);
            gens.push(row);
        }
        if !lattice::spans_full_lattice(&gens, k) {
            return Err(Error::NonGenerating);
        }
        Ok(Self {
            orders,
            weights,
            order,
            dim,
        })
    }

    /// The cyclic group `Z/r` acting with weights `(a_1, .., a_n)`, written
    /// `1/r(a_1, .., a_n)`.
    pub fn cyclic(r: i64, weights: &[i64]) -> Result<Self> {
        Self::new(vec![r], vec![weights.to_vec()])
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Group order `r`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Dimension `n` of the affine space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trivial(&self) -> Character {
        Character {
            residues: vec![0; self.orders.len()],
        }
    }

    /// The weight character `ρ_i`, `label` in `1..=n`.
    pub fn weight(&self, label: usize) -> Character {
        assert!((1..=self.dim).contains(&label), "label out of range");
        Character {
            residues: self.weights.iter().map(|row| row[label - 1]).collect(),
        }
    }

    pub fn contains(&self, c: &Character) -> bool {
        c.residues.len() == self.orders.len()
            && c.residues
                .iter()
                .zip(&self.orders)
                .all(|(&x, &r)| (0..r).contains(&x))
    }

    pub fn mul(&self, a: &Character, b: &Character) -> Character {
        Character {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.orders)
                .map(|((x, y), r)| (x + y).rem_euclid(*r))
                .collect(),
        }
    }

    pub fn inv(&self, a: &Character) -> Character {
        Character {
            residues: a
                .residues
                .iter()
                .zip(&self.orders)
                .map(|(x, r)| (-x).rem_euclid(*r))
                .collect(),
        }
    }

    pub fn pow(&self, a: &Character, e: i64) -> Character {
        Character {
            residues: a
                .residues
                .iter()
                .zip(&self.orders)
                .map(|(x, r)| (((x % r) * (e.rem_euclid(*r))) % r).rem_euclid(*r))
                .collect(),
        }
    }

    /// `deg(m) = ∏ ρ_i^{m_i}`.
    pub fn deg(&self, m: &[i64]) -> Character {
        assert_eq!(m.len(), self.dim);
        Character {
            residues: self
                .weights
                .iter()
                .zip(&self.orders)
                .map(|(row, &r)| {
                    row.iter().zip(m).fold(0i64, |acc, (&w, &mi)| {
                        (acc + w * mi.rem_euclid(r)).rem_euclid(r)
                    })
                })
                .collect(),
        }
    }

    /// True when `m` lies in `M = ker(deg)`.
    pub fn in_m(&self, m: &[i64]) -> bool {
        self.deg(m).residues.iter().all(|&x| x == 0)
    }

    /// Order of the character `c` in the group.
    pub fn character_order(&self, c: &Character) -> i64 {
        c.residues
            .iter()
            .zip(&self.orders)
            .map(|(&x, &r)| r / num_integer::gcd(x, r))
            .fold(1, num_integer::lcm)
    }

    /// Position of `c` in the canonical vertex order (mixed radix, first
    /// factor most significant; the trivial character is 0).
    pub fn index_of(&self, c: &Character) -> usize {
        c.residues
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&x, &r)| acc * r as usize + x as usize)
    }

    pub fn character_at(&self, mut idx: usize) -> Character {
        let mut residues = vec![0; self.orders.len()];
        for (slot, &r) in residues.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % r as usize) as i64;
            idx /= r as usize;
        }
        Character { residues }
    }

    /// All characters in canonical order.
    pub fn characters(&self) -> Vec<Character> {
        (0..self.order).map(|i| self.character_at(i)).collect()
    }

    /// Short human-readable description, e.g. `1/7(1,2)`.
    pub fn describe(&self) -> String {
        let rows: Vec<String> = self
            .weights
            .iter()
            .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        if self.orders.len() == 1 {
            format!("1/{}({})", self.orders[0], rows[0])
        } else {
            let orders: Vec<String> = self.orders.iter().map(i64::to_string).collect();
            format!("{}:{}", orders.join("x"), rows.join(";"))
        }
    }
}
