use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::exact_algebra::{rat, LaurentPoly};
use crate::symfun::MonomialTable;
use crate::Variant;

/// A word over `[k]`, letters stored as `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_smirnov(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&l| l > 9) { "," } else { "" };
        let text: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&text.join(sep))
    }
}

/// How the first letter compares with the last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndpointClass {
    Less,
    Greater,
    Equal,
}

impl EndpointClass {
    pub fn of(first: u32, last: u32) -> Self {
        match first.cmp(&last) {
            Ordering::Less => EndpointClass::Less,
            Ordering::Greater => EndpointClass::Greater,
            Ordering::Equal => EndpointClass::Equal,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EndpointClass::Less => '<',
            EndpointClass::Greater => '>',
            EndpointClass::Equal => '=',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    All,
    Less,
    Greater,
    Equal,
    NotEqual,
}

impl ClassFilter {
    pub fn accepts(self, class: EndpointClass) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Less => class == EndpointClass::Less,
            ClassFilter::Greater => class == EndpointClass::Greater,
            ClassFilter::Equal => class == EndpointClass::Equal,
            ClassFilter::NotEqual => class != EndpointClass::Equal,
        }
    }

    /// The endpoint filter of a word enumerator; `None` for the cycle.
    pub fn of_variant(v: Variant) -> Option<Self> {
        match v {
            Variant::Plain | Variant::Tilde => Some(ClassFilter::All),
            Variant::Less => Some(ClassFilter::Less),
            Variant::Greater => Some(ClassFilter::Greater),
            Variant::Equal => Some(ClassFilter::Equal),
            Variant::NotEqual | Variant::TildeNotEqual => Some(ClassFilter::NotEqual),
            Variant::Cycle => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordStats {
    pub des: usize,
    pub asc: usize,
    pub cdes: usize,
    pub class: EndpointClass,
}

/// Descents, ascents, cyclic descents (`w_{n+1} := w_1`) and endpoint class.
pub fn word_stats(w: &Word) -> WordStats {
    let l = w.letters();
    assert!(!l.is_empty(), "statistics of the empty word");
    let des = l.windows(2).filter(|p| p[0] > p[1]).count();
    let asc = l.windows(2).filter(|p| p[0] < p[1]).count();
    let (first, last) = (l[0], l[l.len() - 1]);
    WordStats {
        des,
        asc,
        cdes: des + usize::from(last > first),
        class: EndpointClass::of(first, last),
    }
}

/// Lexicographic stream of the Smirnov words of length `n` over `[k]`
/// passing `filter`.
pub fn smirnov_words(n: usize, k: u32, filter: ClassFilter) -> SmirnovWords {
    SmirnovWords {
        n,
        k,
        filter,
        current: None,
        started: false,
    }
}

pub struct SmirnovWords {
    n: usize,
    k: u32,
    filter: ClassFilter,
    current: Option<Vec<u32>>,
    started: bool,
}

impl SmirnovWords {
    /// Smallest letter above `floor` that differs from `prev`.
    fn smallest_from(&self, floor: u32, prev: Option<u32>) -> Option<u32> {
        let mut c = floor;
        if Some(c) == prev {
            c += 1;
        }
        (c <= self.k).then_some(c)
    }

    /// Fills positions `from..n` with the lexicographically least completion.
    fn fill_from(&self, w: &mut Vec<u32>, from: usize) -> bool {
        w.truncate(from);
        while w.len() < self.n {
            match self.smallest_from(1, w.last().copied()) {
                Some(c) => w.push(c),
                None => return false,
            }
        }
        true
    }

    fn advance(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            if self.n == 0 || self.k == 0 {
                return None;
            }
            let mut w = Vec::with_capacity(self.n);
            return self.fill_from(&mut w, 0).then_some(w);
        }
        let mut w = self.current.take()?;
        for i in (0..self.n).rev() {
            let prev = if i == 0 { None } else { Some(w[i - 1]) };
            if let Some(c) = self.smallest_from(w[i] + 1, prev) {
                w[i] = c;
                if self.fill_from(&mut w, i + 1) {
                    return Some(w);
                }
            }
        }
        None
    }
}

impl Iterator for SmirnovWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let w = self.advance()?;
            self.current = Some(w.clone());
            let class = EndpointClass::of(w[0], w[w.len() - 1]);
            if self.filter.accepts(class) {
                return Some(Word(w));
            }
        }
    }
}

type Counts = HashMap<(Vec<u8>, i64), u64>;

struct WordWalk {
    n: usize,
    k: u32,
    filter: ClassFilter,
    cyclic: bool,
}

impl WordWalk {
    fn extend(&self, first: u32, prev: u32, des: i64, depth: usize, exps: &mut Vec<u8>, out: &mut Counts) {
        if depth == self.n {
            if !self.filter.accepts(EndpointClass::of(first, prev)) {
                return;
            }
            let stat = des + i64::from(self.cyclic && prev > first);
            *out.entry((exps.clone(), stat)).or_insert(0) += 1;
            return;
        }
        for c in 1..=self.k {
            if c == prev {
                continue;
            }
            exps[c as usize - 1] += 1;
            self.extend(first, c, des + i64::from(prev > c), depth + 1, exps, out);
            exps[c as usize - 1] -= 1;
        }
    }
}

pub(crate) fn counts_to_table(k: usize, counts: Counts) -> MonomialTable {
    let mut table = MonomialTable::new(k);
    let mut entries: Vec<_> = counts.into_iter().collect();
    entries.sort_unstable();
    for ((exps, stat), count) in entries {
        table.add_term(exps, LaurentPoly::monomial(rat(count as i64), stat));
    }
    table
}

/// `Σ t^{stat(w)} x_w` over the Smirnov words of the variant, in `k`
/// variables. `stat` is `cdes` for the tilde variants and `des` otherwise;
/// the cycle variant is the proper-coloring sum of the labeled cycle.
pub fn brute_enumerator(v: Variant, n: usize, k: usize) -> MonomialTable {
    let Some(filter) = ClassFilter::of_variant(v) else {
        let cycle = super::Digraph::cycle(n);
        return super::chromatic_qsym(&cycle, k, super::GraphMode::Labeled);
    };
    let walk = WordWalk {
        n,
        k: k as u32,
        filter,
        cyclic: v.is_cyclic(),
    };
    if n == 0 {
        return MonomialTable::new(k);
    }
    let counts = (1..=walk.k)
        .into_par_iter()
        .map(|first| {
            let mut exps = vec![0u8; k];
            exps[first as usize - 1] = 1;
            let mut out = Counts::new();
            walk.extend(first, first, 0, 1, &mut exps, &mut out);
            out
        })
        .reduce(Counts::new, |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_insert(0) += c;
            }
            a
        });
    counts_to_table(k, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize, k: u32, f: ClassFilter) -> Vec<String> {
        smirnov_words(n, k, f).map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_streams() {
        assert_eq!(words(2, 2, ClassFilter::All), ["12", "21"]);
        assert_eq!(words(3, 2, ClassFilter::All), ["121", "212"]);
        assert_eq!(smirnov_words(3, 3, ClassFilter::All).count(), 12);
        assert_eq!(words(1, 3, ClassFilter::Less), Vec::<String>::new());
        assert_eq!(words(1, 2, ClassFilter::Equal), ["1", "2"]);
        assert_eq!(words(3, 1, ClassFilter::All), Vec::<String>::new());
    }

    #[test]
    fn stream_count_formula() {
        for n in 1..=6 {
            for k in 1..=5u32 {
                let want = k as usize * (k as usize - 1).pow(n as u32 - 1);
                assert_eq!(smirnov_words(n, k, ClassFilter::All).count(), want);
            }
        }
    }

    #[test]
    fn stats_examples() {
        let s = word_stats(&Word(vec![1, 2, 1]));
        assert_eq!((s.des, s.cdes, s.class), (1, 1, EndpointClass::Equal));
        let s = word_stats(&Word(vec![1, 2]));
        assert_eq!((s.des, s.cdes, s.class), (0, 1, EndpointClass::Less));
        let s = word_stats(&Word(vec![4]));
        assert_eq!((s.des, s.cdes), (0, 0));
    }

    #[test]
    fn plain_n3_k2() {
        let table = brute_enumerator(Variant::Plain, 3, 2);
        let mut want = MonomialTable::new(2);
        want.add_t_monomial(vec![2, 1], 1);
        want.add_t_monomial(vec![1, 2], 1);
        assert_eq!(table, want);
    }

    #[test]
    fn walk_agrees_with_stream() {
        for v in Variant::ALL.into_iter().filter(|v| *v != Variant::Cycle) {
            for n in 1..=5 {
                let filter = ClassFilter::of_variant(v).unwrap();
                let mut want = MonomialTable::new(4);
                for w in smirnov_words(n, 4, filter) {
                    let s = word_stats(&w);
                    let stat = if v.is_cyclic() { s.cdes } else { s.des };
                    let mut e = vec![0u8; 4];
                    for &l in w.letters() {
                        e[l as usize - 1] += 1;
                    }
                    want.add_t_monomial(e, stat as i64);
                }
                assert_eq!(brute_enumerator(v, n, 4), want, "{v} n={n}");
            }
        }
    }
}
