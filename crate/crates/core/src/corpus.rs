//! Built-in corpus of small groups used by the verification campaigns:
//! cyclic groups through C12, the symmetric and alternating groups up to
//! S4/A5, dihedral groups D4 and D6, the quaternion group, SL(2,3), and two
//! non-cyclic abelian 2-groups.

use crate::group::FiniteGroup;

/// Names of the built-in corpus, in campaign order.
pub const CORPUS_NAMES: [&str; 22] = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "S3", "D4", "Q8",
    "A4", "D6", "S4", "SL23", "A5", "C2xC4", "C2^3",
];

/// Looks up a corpus group by name.
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let g = match name {
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "A4" => alternating(4),
        "A5" => alternating(5),
        "D4" => dihedral(4),
        "D6" => dihedral(6),
        "Q8" => quaternion8(),
        "SL23" => special_linear_2_3(),
        "C2xC4" => abelian(&[2, 4]),
        "C2^3" => abelian(&[2, 2, 2]),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            if n == 0 {
                return None;
            }
            cyclic(n)
        }
    };
    Some(g)
}

pub fn all() -> Vec<(String, FiniteGroup)> {
    CORPUS_NAMES
        .iter()
        .map(|&n| (n.to_string(), by_name(n).unwrap()))
        .collect()
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(&table, &format!("C{}", n)).unwrap()
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    let n: usize = orders.iter().product();
    let decode = |mut x: usize| -> Vec<usize> {
        orders
            .iter()
            .map(|&o| {
                let d = x % o;
                x /= o;
                d
            })
            .collect()
    };
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(orders)
            .rev()
            .fold(0, |acc, (&d, &o)| acc * o + d)
    };
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let a = decode(i);
            (0..n)
                .map(|j| {
                    let b = decode(j);
                    let sum: Vec<usize> =
                        a.iter().zip(&b).zip(orders).map(|((&x, &y), &o)| (x + y) % o).collect();
                    encode(&sum)
                })
                .collect()
        })
        .collect();
    let name = orders
        .iter()
        .map(|o| format!("C{}", o))
        .collect::<Vec<_>>()
        .join("x");
    FiniteGroup::from_table(&table, &name).unwrap()
}

pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 2);
    let transposition = vec![vec![1, 2]];
    let cycle = vec![(1..=n).collect::<Vec<_>>()];
    FiniteGroup::from_permutations(n, &[transposition, cycle]).unwrap()
}

pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    if n == 3 {
        return FiniteGroup::from_permutations(3, &[vec![vec![1, 2, 3]]]).unwrap();
    }
    // (1 2 3) and either (1 2)(3 4)... for A4, or the n-cycle/(n-1)-cycle
    // pattern in general: even n uses (1 2)(3 ... n) shape, odd n the full
    // cycle (1 ... n).
    let three = vec![vec![1, 2, 3]];
    let second = if n % 2 == 1 {
        vec![(1..=n).collect::<Vec<_>>()]
    } else {
        vec![vec![1, 2], (3..=n).collect::<Vec<_>>()]
    };
    FiniteGroup::from_permutations(n, &[three, second]).unwrap()
}

pub fn dihedral(n: usize) -> FiniteGroup {
    // Symmetries of the regular n-gon: rotation (1 ... n) and a reflection.
    assert!(n >= 3);
    let rotation = vec![(1..=n).collect::<Vec<_>>()];
    // Reflection fixing vertex 1: i <-> n + 2 - i.
    let mut cycles = Vec::new();
    let mut lo = 2;
    let mut hi = n;
    while lo < hi {
        cycles.push(vec![lo, hi]);
        lo += 1;
        hi -= 1;
    }
    FiniteGroup::from_permutations(n, &[rotation, cycles]).unwrap()
}

/// The quaternion group, elements `a^s b^t` with `a^4 = 1`, `b^2 = a^2`,
/// `b a b^{-1} = a^{-1}`; index is `s + 4t`.
pub fn quaternion8() -> FiniteGroup {
    let mul = |x: usize, y: usize| -> usize {
        let (s, t) = (x % 4, x / 4);
        let (s2, t2) = (y % 4, y / 4);
        if t == 0 {
            (s + s2) % 4 + 4 * t2
        } else {
            // b a^{s2} = a^{-s2} b, and b^2 = a^2.
            let s_new = (s + 4 - s2 + if t2 == 1 { 2 } else { 0 }) % 4;
            s_new + 4 * ((t + t2) % 2)
        }
    };
    let table: Vec<Vec<usize>> = (0..8).map(|i| (0..8).map(|j| mul(i, j)).collect()).collect();
    FiniteGroup::from_table(&table, "Q8").unwrap()
}

/// SL(2,3) acting on the eight nonzero vectors of F_3^2.
pub fn special_linear_2_3() -> FiniteGroup {
    let vectors: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|x| (0..3u8).map(move |y| (x, y)))
        .filter(|&(x, y)| x != 0 || y != 0)
        .collect();
    let apply = |m: [[u8; 2]; 2], v: (u8, u8)| -> (u8, u8) {
        (
            (m[0][0] * v.0 + m[0][1] * v.1) % 3,
            (m[1][0] * v.0 + m[1][1] * v.1) % 3,
        )
    };
    let gens = [[[1, 1], [0, 1]], [[0, 2], [1, 0]]];
    let perms: Vec<Vec<usize>> = gens
        .iter()
        .map(|&m| {
            vectors
                .iter()
                .map(|&v| {
                    let w = apply(m, v);
                    vectors.iter().position(|&u| u == w).unwrap()
                })
                .collect()
        })
        .collect();
    let g = FiniteGroup::from_perm_tables(8, &perms).unwrap();
    assert_eq!(g.order(), 24, "SL(2,3) construction");
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders() {
        let expected: Vec<(&str, usize)> = vec![
            ("C1", 1),
            ("C12", 12),
            ("S3", 6),
            ("D4", 8),
            ("Q8", 8),
            ("A4", 12),
            ("D6", 12),
            ("S4", 24),
            ("SL23", 24),
            ("A5", 60),
            ("C2xC4", 8),
            ("C2^3", 8),
        ];
        for (name, order) in expected {
            let g = by_name(name).unwrap();
            assert_eq!(g.order(), order, "{}", name);
        }
    }

    #[test]
    fn structural_spot_checks() {
        assert!(by_name("C2xC4").unwrap().is_abelian());
        assert!(!by_name("D6").unwrap().is_abelian());
        // Q8 has a unique element of order 2.
        let q8 = quaternion8();
        assert_eq!(
            q8.elements().filter(|&x| q8.element_order(x) == 2).count(),
            1
        );
        // SL(2,3) has a unique element of order 2 as well (its center).
        let sl = special_linear_2_3();
        assert_eq!(
            sl.elements().filter(|&x| sl.element_order(x) == 2).count(),
            1
        );
        // A5 is simple-ish sanity: exponent 30, 60 elements.
        let a5 = alternating(5);
        assert_eq!(a5.exponent(), 30);
    }
}
