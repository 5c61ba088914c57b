//! A deliberately naive reference implementation used to recompute the
//! fixture regression values from first principles: plain `Vec<usize>`
//! sets, direct definition scans, no bit tricks, no sharing with the
//! library's code paths.

pub type Set = Vec<usize>;

pub struct Analysis {
    pub is_la: bool,
    pub left_identities: Set,
    pub regular: bool,
    pub right_invertible: bool,
    pub associative: bool,
    pub commutative: bool,
    /// Two-sided ideals as sorted member lists, ascending by bit pattern.
    pub ideals: Vec<Set>,
    pub semiprime: Vec<(Set, bool)>,
    pub strongly_irreducible: Vec<(Set, bool)>,
    pub fully_prime: bool,
    pub totally_ordered: bool,
}

fn mul(rows: &[Vec<usize>], a: usize, b: usize) -> usize {
    rows[a][b]
}

fn contains(set: &Set, e: usize) -> bool {
    set.iter().any(|&x| x == e)
}

fn subset(a: &Set, b: &Set) -> bool {
    a.iter().all(|&x| contains(b, x))
}

fn product(rows: &[Vec<usize>], a: &Set, b: &Set) -> Set {
    let mut out = Set::new();
    for &x in a {
        for &y in b {
            let p = mul(rows, x, y);
            if !contains(&out, p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

fn is_two_sided_ideal(rows: &[Vec<usize>], i: &Set) -> bool {
    if i.is_empty() {
        return false;
    }
    let carrier: Set = (0..rows.len()).collect();
    subset(&product(rows, &carrier, i), i) && subset(&product(rows, i, &carrier), i)
}

fn nonempty_subsets(n: usize) -> Vec<Set> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        out.push((0..n).filter(|&e| mask >> e & 1 == 1).collect());
    }
    out
}

pub fn analyze(rows: &[Vec<usize>]) -> Analysis {
    let n = rows.len();
    let elements: Vec<usize> = (0..n).collect();

    let mut is_la = true;
    let mut associative = true;
    for &a in &elements {
        for &b in &elements {
            for &c in &elements {
                if mul(rows, mul(rows, a, b), c) != mul(rows, mul(rows, c, b), a) {
                    is_la = false;
                }
                if mul(rows, mul(rows, a, b), c) != mul(rows, a, mul(rows, b, c)) {
                    associative = false;
                }
            }
        }
    }
    let commutative = elements
        .iter()
        .all(|&a| elements.iter().all(|&b| mul(rows, a, b) == mul(rows, b, a)));

    let left_identities: Set = elements
        .iter()
        .copied()
        .filter(|&e| elements.iter().all(|&x| mul(rows, e, x) == x))
        .collect();

    let regular = elements.iter().all(|&a| {
        elements
            .iter()
            .any(|&x| mul(rows, mul(rows, a, x), a) == a)
    });

    let right_invertible = match left_identities.first() {
        None => false,
        Some(&e) => elements
            .iter()
            .all(|&a| elements.iter().any(|&x| mul(rows, a, x) == e)),
    };

    let ideals: Vec<Set> = nonempty_subsets(n)
        .into_iter()
        .filter(|i| is_two_sided_ideal(rows, i))
        .collect();

    let is_prime = |p: &Set| -> bool {
        ideals.iter().all(|a| {
            ideals
                .iter()
                .all(|b| !subset(&product(rows, a, b), p) || subset(a, p) || subset(b, p))
        })
    };
    let is_semiprime = |p: &Set| -> bool {
        ideals
            .iter()
            .all(|i| !subset(&product(rows, i, i), p) || subset(i, p))
    };
    let is_strongly_irreducible = |p: &Set| -> bool {
        ideals.iter().all(|h| {
            ideals.iter().all(|k| {
                let meet: Set = h.iter().copied().filter(|&x| contains(k, x)).collect();
                !subset(&meet, p) || subset(h, p) || subset(k, p)
            })
        })
    };

    Analysis {
        is_la,
        left_identities,
        regular,
        right_invertible,
        associative,
        commutative,
        fully_prime: ideals.iter().all(|p| is_prime(p)),
        semiprime: ideals.iter().map(|p| (p.clone(), is_semiprime(p))).collect(),
        strongly_irreducible: ideals
            .iter()
            .map(|p| (p.clone(), is_strongly_irreducible(p)))
            .collect(),
        totally_ordered: ideals
            .iter()
            .all(|a| ideals.iter().all(|b| subset(a, b) || subset(b, a))),
        ideals,
    }
}
