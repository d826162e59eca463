//! Abstract finite groups given by an explicit element list and product
//! rule; used for SL₂(p), which exists purely as an isomorphism-test target.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A finite group with identity at index 0 and a dense multiplication table.
#[derive(Debug, Clone)]
pub struct TableGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    name: String,
}

impl TableGroup {
    pub fn name(&self) -> &str {
        &self.name
    }
}

impl FiniteGroup for TableGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// All 2×2 matrices of determinant one over the prime field 𝔽_p, as an
/// abstract multiplication table. Elements are ordered lexicographically by
/// (a, b, c, d) with the identity moved to the front, so the construction is
/// deterministic.
pub fn sl2_table(p: u32) -> Result<TableGroup> {
    if !(2..=13).contains(&p) || !is_prime(p) {
        return Err(Error::BadParameter(format!(
            "sl2 parameter must be a prime ≤ 13, got {p}"
        )));
    }
    let pu = p as usize;
    let mut elements: Vec<[u32; 4]> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    // b·c < p², so the shift keeps the difference nonnegative
                    if (a * d + p * p - b * c) % p == 1 {
                        elements.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let id = [1 % p, 0, 0, 1 % p];
    let id_pos = elements.iter().position(|e| *e == id).unwrap();
    elements.remove(id_pos);
    elements.insert(0, id);

    let order = elements.len();
    let pack = |m: &[u32; 4]| -> usize {
        ((m[0] * p + m[1]) * p + m[2]) as usize * pu + m[3] as usize
    };
    let mut index = vec![u32::MAX; pu * pu * pu * pu];
    for (i, e) in elements.iter().enumerate() {
        index[pack(e)] = i as u32;
    }

    let mul_mats = |x: &[u32; 4], y: &[u32; 4]| -> [u32; 4] {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };

    let mut table = vec![0u32; order * order];
    for i in 0..order {
        for j in 0..order {
            table[i * order + j] = index[pack(&mul_mats(&elements[i], &elements[j]))];
        }
    }
    // inverse of [[a,b],[c,d]] with det 1 is [[d,−b],[−c,a]]
    let inverses: Vec<u32> = elements
        .iter()
        .map(|m| {
            let inv = [m[3], (p - m[1]) % p, (p - m[2]) % p, m[0]];
            index[pack(&inv)]
        })
        .collect();

    // the elementary transvections generate SL₂(𝔽_p)
    let g1 = index[pack(&[1 % p, 1 % p, 0, 1 % p])] as usize;
    let g2 = index[pack(&[1 % p, 0, 1 % p, 1 % p])] as usize;

    Ok(TableGroup {
        order,
        table,
        inverses,
        generators: vec![g1, g2],
        name: format!("sl2({p})"),
    })
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::algo::{element_order, is_perfect, subgroup_closure};

    #[test]
    fn sl2_orders_match_the_enumeration() {
        // |SL₂(p)| = p(p²−1)
        for (p, expect) in [(2u32, 6usize), (3, 24), (5, 120), (7, 336)] {
            let g = sl2_table(p).unwrap();
            assert_eq!(g.order(), expect, "p = {p}");
            // identity is at index 0 and the table is a group table
            assert_eq!(g.mul(0, 3 % g.order()), 3 % g.order());
            for i in 0..g.order() {
                assert_eq!(g.mul(i, g.inv(i)), 0);
            }
        }
    }

    #[test]
    fn declared_generators_generate() {
        let g = sl2_table(5).unwrap();
        let h = subgroup_closure(&g, g.generators());
        assert_eq!(h.order(), g.order());
    }

    #[test]
    fn sl2_3_is_not_perfect_sl2_5_is() {
        assert!(!is_perfect(&sl2_table(3).unwrap()));
        assert!(is_perfect(&sl2_table(5).unwrap()));
    }

    #[test]
    fn sl2_5_has_elements_of_order_ten() {
        let g = sl2_table(5).unwrap();
        assert!((0..g.order()).any(|i| element_order(&g, i) == 10));
    }
}
