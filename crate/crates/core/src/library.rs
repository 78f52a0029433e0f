//! Standard small groups as permutation groups.

use crate::group::PermGroup;
use crate::perm::Perm;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let pts: Vec<u32> = points.into_iter().map(|p| p as u32).collect();
    Perm::from_cycles(degree, &[&pts]).expect("valid cycle")
}

/// `C_n` on `n` points (`C_1` on one point).
pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    PermGroup::from_gens(n, vec![cycle(n, 0..n)])
}

pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 1);
    if n < 2 {
        return PermGroup::trivial(n);
    }
    PermGroup::from_gens(n, vec![cycle(n, 0..n), cycle(n, 0..2)])
}

pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 1);
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let long = if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) };
    PermGroup::from_gens(n, vec![cycle(n, 0..3), long])
}

/// Dihedral group of the given order (`2n`), acting on an `n`-gon.
pub fn dihedral(order: usize) -> PermGroup {
    assert!(order >= 6 && order.is_multiple_of(2), "dihedral order must be even and at least 6");
    let n = order / 2;
    let reflection = Perm::from_images_unchecked((0..n).map(|i| ((n - i) % n) as u32).collect());
    PermGroup::from_gens(n, vec![cycle(n, 0..n), reflection])
}

/// The quaternion group of order 8, in its regular representation.
pub fn quaternion() -> PermGroup {
    let i = Perm::parse_cycles(8, "(0 1 2 3)(4 5 6 7)").unwrap();
    let j = Perm::parse_cycles(8, "(0 4 2 6)(1 7 3 5)").unwrap();
    PermGroup::from_gens(8, vec![i, j])
}

/// `C_p^rank` on `p·rank` points.
pub fn elementary_abelian(p: usize, rank: usize) -> PermGroup {
    let degree = p * rank;
    let gens = (0..rank).map(|k| cycle(degree, k * p..(k + 1) * p)).collect();
    PermGroup::from_gens(degree, gens)
}

/// `SL(2, p)` acting on the `p² - 1` nonzero row vectors of `F_p²`.
pub fn special_linear_2(p: usize) -> PermGroup {
    assert!(crate::formation::is_prime(p as u64), "SL(2, p) needs a prime p");
    let degree = p * p - 1;
    let index = |a: usize, b: usize| a * p + b - 1;
    let act = |m: [[usize; 2]; 2]| {
        let mut images = vec![0u32; degree];
        for a in 0..p {
            for b in 0..p {
                if a == 0 && b == 0 {
                    continue;
                }
                let x = (a * m[0][0] + b * m[1][0]) % p;
                let y = (a * m[0][1] + b * m[1][1]) % p;
                images[index(a, b)] = index(x, y) as u32;
            }
        }
        Perm::from_images_unchecked(images)
    };
    let t = act([[1, 1], [0, 1]]);
    let w = act([[0, 1], [p - 1, 0]]);
    PermGroup::from_gens(degree, vec![t, w])
}

/// `G ≀ C_2`: two copies of `G` swapped by an involution.
pub fn wreath_with_c2(g: &PermGroup) -> PermGroup {
    let d = g.degree();
    let base = g.direct_product(g);
    let swap = Perm::from_images_unchecked(
        (0..2 * d).map(|i| ((i + d) % (2 * d)) as u32).collect(),
    );
    let mut gens = base.generators().to_vec();
    gens.push(swap);
    PermGroup::from_gens(2 * d, gens)
}
