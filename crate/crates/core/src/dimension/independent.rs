use super::MonomialIdeal;

/// Largest variable set `S` such that no generator's support lies inside `S`.
///
/// Returns `(|S|, S)` with the lexicographically smallest maximizing `S`, or
/// `(-1, [])` for the unit ideal. Equivalent to `N` minus a minimum hitting set
/// of the generator supports.
pub fn krull_dimension(ideal: &MonomialIdeal) -> (i64, Vec<usize>) {
    if ideal.is_unit() {
        return (-1, Vec::new());
    }
    let n = ideal.nvars();
    let supports = minimal_supports(ideal);
    let mut search = Search {
        n,
        supports: &supports,
        by_last: last_var_index(&supports, n),
        current: Vec::new(),
        best: Vec::new(),
        best_len: -1,
    };
    search.run(0);
    (search.best_len, search.best)
}

type Support = Vec<u64>;

fn to_bits(vars: &[usize], n: usize) -> Support {
    let mut bits = vec![0u64; n.div_ceil(64).max(1)];
    for &v in vars {
        bits[v / 64] |= 1 << (v % 64);
    }
    bits
}

fn is_subset(a: &Support, b: &Support) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Supports of the generators with supersets removed; they determine the answer.
fn minimal_supports(ideal: &MonomialIdeal) -> Vec<(Vec<usize>, Support)> {
    let n = ideal.nvars();
    let mut sups: Vec<Vec<usize>> = ideal.generators().iter().map(|g| g.support()).collect();
    sups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sups.dedup();
    let mut out: Vec<(Vec<usize>, Support)> = Vec::new();
    for s in sups {
        let bits = to_bits(&s, n);
        if !out.iter().any(|(_, b)| is_subset(b, &bits)) {
            out.push((s, bits));
        }
    }
    out
}

/// Supports grouped by their largest variable: adding variable `v` to `S` can only
/// complete supports whose maximum is `v` when variables are added in order.
fn last_var_index(supports: &[(Vec<usize>, Support)], n: usize) -> Vec<Vec<usize>> {
    let mut by_last = vec![Vec::new(); n];
    for (k, (vars, _)) in supports.iter().enumerate() {
        if let Some(&last) = vars.last() {
            by_last[last].push(k);
        }
    }
    by_last
}

struct Search<'a> {
    n: usize,
    supports: &'a [(Vec<usize>, Support)],
    by_last: Vec<Vec<usize>>,
    current: Vec<usize>,
    best: Vec<usize>,
    best_len: i64,
}

impl Search<'_> {
    /// Include-first depth-first search over variables in index order, so the
    /// first maximum found is the lexicographically smallest one.
    fn run(&mut self, v: usize) {
        let len = self.current.len() as i64;
        if len + (self.n - v) as i64 <= self.best_len {
            return;
        }
        if v == self.n {
            self.best_len = len;
            self.best = self.current.clone();
            return;
        }
        self.current.push(v);
        let bits = to_bits(&self.current, self.n);
        let blocked = self.by_last[v].iter().any(|&k| is_subset(&self.supports[k].1, &bits));
        if !blocked {
            self.run(v + 1);
        }
        self.current.pop();
        self.run(v + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    #[test]
    fn union_of_plane_and_line() {
        // <xy, xz>: V = {x=0} u {y=z=0}
        assert_eq!(krull_dimension(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])), (2, vec![1, 2]));
    }

    #[test]
    fn twisted_cubic_lt() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]]);
        assert_eq!(krull_dimension(&i), (1, vec![2]));
    }

    #[test]
    fn empty_and_unit() {
        assert_eq!(krull_dimension(&ideal(4, &[])), (4, vec![0, 1, 2, 3]));
        assert_eq!(krull_dimension(&ideal(2, &[&[0, 0]])), (-1, vec![]));
        assert_eq!(krull_dimension(&ideal(0, &[])), (0, vec![]));
    }

    #[test]
    fn non_radical_uses_support() {
        // x is not in <x^2>, yet V(x^2) is a point
        assert_eq!(krull_dimension(&ideal(1, &[&[2]])), (0, vec![]));
    }

    #[test]
    fn wide_ambient_space() {
        // 70 variables exercise the multi-word bitsets
        let mut e = vec![0u32; 70];
        e[3] = 1;
        e[66] = 2;
        let i = MonomialIdeal::new(70, vec![Monomial::new(e)]);
        let (d, w) = krull_dimension(&i);
        assert_eq!(d, 69);
        assert!(!w.contains(&66));
    }
}
