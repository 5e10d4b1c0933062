use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FingerprintError;

/// Associativity is checked on every triple up to this order, sampled above.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
const SAMPLED_TRIPLES: usize = 200_000;

/// A finite group given by its Cayley table. Index 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Row `i`, column `j` holds `i * j`.
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, FingerprintError> {
        let name = name.into();
        let n = rows.len();
        let bad = |message: String| FingerprintError::NotAGroup {
            name: name.clone(),
            message,
        };
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(bad(format!("row {i} is not a permutation of 0..{n}")));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &rows {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(bad(format!("column {j} is not a permutation of 0..{n}")));
                }
            }
        }
        if (0..n).any(|i| rows[0][i] != i || rows[i][0] != i) {
            return Err(bad("index 0 is not the identity".into()));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let inverses: Vec<usize> = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| table[i * n + j] == 0)
                    .expect("rows are permutations")
            })
            .collect();
        let g = FiniteGroup {
            name: name.clone(),
            order: n,
            table,
            inverses,
        };
        if let Some((a, b, c)) = g.associativity_failure() {
            return Err(bad(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
        }
        Ok(g)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        let fails = |a, b, c| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if fails(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            (0..SAMPLED_TRIPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
                .find(|&(a, b, c)| fails(a, b, c))
        }
    }

    /// The group generated by `gens` under `mul`, elements numbered in
    /// breadth-first order from `identity`.
    pub fn generated_by<T, F>(name: impl Into<String>, identity: T, gens: &[T], mul: F) -> Self
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let h = mul(&elements[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            i += 1;
        }
        let rows = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        FiniteGroup::from_table(name, rows).expect("closure of a group action is a group")
    }

    /// Permutation group on `0..degree`; permutations compose left to right.
    pub fn permutations(name: impl Into<String>, degree: usize, gens: &[Vec<usize>]) -> Self {
        let id: Vec<usize> = (0..degree).collect();
        FiniteGroup::generated_by(name, id, gens, |a, b| a.iter().map(|&i| b[i]).collect())
    }

    /// `C_{d1} x ... x C_{dk}`.
    pub fn abelian(factors: &[usize]) -> Self {
        let name = if factors.is_empty() {
            "C1".to_string()
        } else {
            factors
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        let k = factors.len();
        let gens: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).map(|j| usize::from(i == j)).collect())
            .collect();
        FiniteGroup::generated_by(name, vec![0; k], &gens, |a, b| {
            a.iter()
                .zip(b)
                .zip(factors)
                .map(|((x, y), d)| (x + y) % d)
                .collect()
        })
    }

    pub fn cyclic(n: usize) -> Self {
        FiniteGroup::abelian(&[n])
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::permutations(format!("D{n}"), n, &[rotation, reflection])
    }

    pub fn symmetric(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut swap: Vec<usize> = (0..n).collect();
        if n > 1 {
            swap.swap(0, 1);
        }
        FiniteGroup::permutations(format!("S{n}"), n, &[cycle, swap])
    }

    pub fn alternating4() -> Self {
        FiniteGroup::permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    /// Quaternion units `±1, ±i, ±j, ±k`.
    pub fn quaternion() -> Self {
        // (sign, unit) with unit 0..4 = 1, i, j, k
        const UNIT: [[(bool, u8); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let i = (false, 1u8);
        let j = (false, 2u8);
        FiniteGroup::generated_by("Q8", (false, 0u8), &[i, j], |a, b| {
            let (s, u) = UNIT[a.1 as usize][b.1 as usize];
            (a.0 ^ b.0 ^ s, u)
        })
    }

    /// `order N name` followed by `N` rows of `N` indices; `#` lines are skipped.
    pub fn parse_cayley(text: &str) -> Result<Self, FingerprintError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err =
            |line: usize, message: String| FingerprintError::CayleyParse { line, message };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "empty file".into()))?;
        let mut parts = header.splitn(3, char::is_whitespace);
        if parts.next() != Some("order") {
            return Err(parse_err(hline, "expected 'order N name'".into()));
        }
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err(hline, "invalid order".into()))?;
        let name = parts.next().map(str::trim).filter(|s| !s.is_empty());
        let name = name.ok_or_else(|| parse_err(hline, "missing group name".into()))?;
        let mut rows = Vec::with_capacity(n);
        for (line, text) in lines {
            if rows.len() == n {
                return Err(parse_err(line, "more than N rows".into()));
            }
            let row = text
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_err(line, e.to_string()))?;
            if row.len() != n {
                return Err(parse_err(
                    line,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(parse_err(
                text.lines().count(),
                format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        FiniteGroup::from_table(name, rows)
    }

    pub fn to_cayley(&self) -> String {
        let mut out = format!("order {} {}\n", self.order, self.name);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.mul(i, j).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ab_ai = self.mul(ab, self.inverse(a));
        self.mul(ab_ai, self.inverse(b))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    stack.push(b);
                }
            }
        }
        member
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).iter().all(|&m| m)
    }

    /// Elements of the derived subgroup in increasing index order.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms: Vec<usize> = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.commutator(a, b);
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let mask = self.closure(&comms);
        (0..self.order).filter(|&i| mask[i]).collect()
    }

    pub fn is_metabelian(&self) -> bool {
        let d = self.derived_subgroup();
        d.iter()
            .all(|&a| d.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Invariant factor chains `d1 | d2 | ... | dk`, `d1 > 1`, with product `n`,
/// fewest factors first.
pub fn abelian_invariant_chains(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, last: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        // the remaining factors are multiples of `last`, the next one divides the rest
        for d in (2..=rest).filter(|d| d % last == 0 && rest.is_multiple_of(*d)) {
            let remaining = rest / d;
            // every later factor is a multiple of d
            if remaining == 1 || remaining.is_multiple_of(d) {
                prefix.push(d);
                extend(remaining, d, prefix, out);
                prefix.pop();
            }
        }
    }
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Abelian groups of order `2..=16`, then `S3, D4, Q8, D5, A4, D6`.
pub fn default_panel() -> Vec<FiniteGroup> {
    let mut panel: Vec<FiniteGroup> = (2..=16)
        .flat_map(abelian_invariant_chains)
        .map(|c| FiniteGroup::abelian(&c))
        .collect();
    let mut s3 = FiniteGroup::symmetric(3);
    s3.name = "S3".into();
    panel.extend([
        s3,
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion(),
        FiniteGroup::dihedral(5),
        FiniteGroup::alternating4(),
        FiniteGroup::dihedral(6),
    ]);
    panel
}
