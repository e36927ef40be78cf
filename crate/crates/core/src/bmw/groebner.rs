//! Noncommutative Buchberger completion over a field.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use super::word::{deglex, DegLex, Word};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Noncommutative polynomial, terms sorted by decreasing degree-lex word.
pub type NcPoly<K> = Vec<(Word, K)>;

/// Sorts, merges and drops zero terms.
pub fn normalize<K: Scalar>(terms: Vec<(Word, K)>) -> NcPoly<K> {
    let mut map: BTreeMap<DegLex, K> = BTreeMap::new();
    for (w, c) in terms {
        accumulate(&mut map, w, c);
    }
    map.into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (w.0, c))
        .collect()
}

fn accumulate<K: Scalar>(map: &mut BTreeMap<DegLex, K>, w: Word, c: K) {
    use std::collections::btree_map::Entry;
    match map.entry(DegLex(w)) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let v = std::mem::replace(e.get_mut(), K::zero());
            let s = v + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A rewrite rule `lead -> tail`; every tail word is smaller than `lead`.
#[derive(Clone, Debug)]
pub struct Rule<K> {
    pub lead: Word,
    pub tail: NcPoly<K>,
}

/// A reduced rule set with fast lookup of leading words.
#[derive(Clone, Debug)]
pub struct RuleSet<K> {
    rules: Vec<Option<Rule<K>>>,
    lookup: HashMap<Word, usize>,
    lens: Vec<usize>,
}

impl<K: Scalar> Default for RuleSet<K> {
    fn default() -> Self {
        RuleSet {
            rules: Vec::new(),
            lookup: HashMap::new(),
            lens: Vec::new(),
        }
    }
}

impl<K: Scalar> RuleSet<K> {
    pub fn from_rules(rules: Vec<Rule<K>>) -> Self {
        let mut set = RuleSet::default();
        for r in rules {
            set.insert(r);
        }
        set
    }

    fn insert(&mut self, rule: Rule<K>) -> usize {
        let id = self.rules.len();
        let len = rule.lead.len();
        self.lookup.insert(rule.lead.clone(), id);
        self.rules.push(Some(rule));
        if !self.lens.contains(&len) {
            self.lens.push(len);
            self.lens.sort_unstable();
        }
        id
    }

    fn remove(&mut self, id: usize) -> Option<Rule<K>> {
        let rule = self.rules[id].take()?;
        self.lookup.remove(&rule.lead);
        Some(rule)
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule<K>> {
        self.rules.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    /// Leftmost occurrence of a leading word in `w`: `(rule id, start)`.
    pub fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for end in 1..=w.len() {
            for &len in &self.lens {
                if len > end {
                    break;
                }
                if let Some(&id) = self.lookup.get(&w[end - len..end]) {
                    return Some((id, end - len));
                }
            }
        }
        None
    }

    /// Whether some leading word is a suffix of `w`.
    pub fn has_suffix_lead(&self, w: &[u8]) -> bool {
        self.lens
            .iter()
            .any(|&len| len <= w.len() && self.lookup.contains_key(&w[w.len() - len..]))
    }

    /// Full normal form of a polynomial.
    pub fn reduce(&self, poly: NcPoly<K>) -> NcPoly<K> {
        let mut work: BTreeMap<DegLex, K> = BTreeMap::new();
        for (w, c) in poly {
            accumulate(&mut work, w, c);
        }
        let mut out = Vec::new();
        while let Some((w, c)) = work.pop_last() {
            match self.find(&w.0) {
                None => out.push((w.0, c)),
                Some((id, start)) => {
                    let rule = self.rules[id].as_ref().unwrap();
                    let left = &w.0[..start];
                    let right = &w.0[start + rule.lead.len()..];
                    for (t, d) in &rule.tail {
                        let mut nw = Vec::with_capacity(left.len() + t.len() + right.len());
                        nw.extend_from_slice(left);
                        nw.extend_from_slice(t);
                        nw.extend_from_slice(right);
                        accumulate(&mut work, nw, c.clone() * d);
                    }
                }
            }
        }
        out
    }
}

/// Critical pair: overlap of `a`'s suffix with `b`'s prefix of length `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Input(usize),
    Pair { a: usize, b: usize, k: usize },
}

fn with_suffix<K: Scalar>(p: &NcPoly<K>, prefix: &[u8], suffix: &[u8]) -> Vec<(Word, K)> {
    p.iter()
        .map(|(w, c)| {
            let mut nw = Vec::with_capacity(prefix.len() + w.len() + suffix.len());
            nw.extend_from_slice(prefix);
            nw.extend_from_slice(w);
            nw.extend_from_slice(suffix);
            (nw, c.clone())
        })
        .collect()
}

/// Completes `inputs` to a reduced Gröbner basis under degree-lex order.
///
/// `cap` bounds the number of processed critical pairs.
pub fn complete<K: Scalar>(inputs: Vec<NcPoly<K>>, cap: usize) -> Result<RuleSet<K>> {
    let mut set: RuleSet<K> = RuleSet::default();
    let mut pending: Vec<NcPoly<K>> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(usize, usize, Task)>> = BinaryHeap::new();
    let mut seq = 0usize;
    let mut push = |heap: &mut BinaryHeap<_>, deg: usize, t: Task| {
        heap.push(Reverse((deg, seq, t)));
        seq += 1;
    };
    for p in inputs {
        let p = normalize(p);
        if p.is_empty() {
            continue;
        }
        let deg = p[0].0.len();
        pending.push(p);
        push(&mut heap, deg, Task::Input(pending.len() - 1));
    }
    let mut steps = 0usize;
    while let Some(Reverse((_, _, task))) = heap.pop() {
        steps += 1;
        if steps > cap {
            return Err(Error::RewriteLimit(cap));
        }
        let poly: NcPoly<K> = match task {
            Task::Input(i) => std::mem::take(&mut pending[i]),
            Task::Pair { a, b, k } => {
                let (Some(ra), Some(rb)) = (&set.rules[a], &set.rules[b]) else {
                    continue;
                };
                let pre = &ra.lead[..ra.lead.len() - k];
                let suf = &rb.lead[k..];
                let mut terms = with_suffix(&rb.tail, pre, &[]);
                for (w, c) in with_suffix(&ra.tail, &[], suf) {
                    terms.push((w, -c));
                }
                terms
            }
        };
        let reduced = set.reduce(poly);
        let Some((lead, lc)) = reduced.first().cloned() else {
            continue;
        };
        let inv = lc.try_inv()?;
        let tail: NcPoly<K> = reduced[1..]
            .iter()
            .map(|(w, c)| (w.clone(), -(c.clone() * &inv)))
            .collect();
        // Rules whose leading word contains the new one are re-queued.
        let stale: Vec<usize> = set
            .rules
            .iter()
            .enumerate()
            .filter_map(|(id, r)| {
                let r = r.as_ref()?;
                let hit = r.lead.len() >= lead.len()
                    && r.lead.windows(lead.len()).any(|win| win == lead.as_slice());
                hit.then_some(id)
            })
            .collect();
        for id in stale {
            let r = set.remove(id).unwrap();
            let mut p = vec![(r.lead, K::one())];
            p.extend(r.tail.into_iter().map(|(w, c)| (w, -c)));
            let deg = p[0].0.len();
            pending.push(p);
            push(&mut heap, deg, Task::Input(pending.len() - 1));
        }
        let new_id = set.insert(Rule {
            lead: lead.clone(),
            tail,
        });
        let ids: Vec<usize> = set
            .rules
            .iter()
            .enumerate()
            .filter_map(|(id, r)| r.as_ref().map(|_| id))
            .collect();
        for other in ids {
            let ol = set.rules[other].as_ref().unwrap().lead.clone();
            let pairs = if other == new_id {
                vec![(new_id, &lead, new_id, &lead)]
            } else {
                vec![(new_id, &lead, other, &ol), (other, &ol, new_id, &lead)]
            };
            for (a, la, b, lb) in pairs {
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] {
                        push(&mut heap, la.len() + lb.len() - k, Task::Pair { a, b, k });
                    }
                }
            }
        }
    }
    // Inter-reduce tails.
    let ids: Vec<usize> = set
        .rules
        .iter()
        .enumerate()
        .filter_map(|(id, r)| r.as_ref().map(|_| id))
        .collect();
    for id in ids {
        let tail = std::mem::take(&mut set.rules[id].as_mut().unwrap().tail);
        let tail = set.reduce(tail);
        set.rules[id].as_mut().unwrap().tail = tail;
    }
    let mut rules: Vec<Rule<K>> = set.rules.into_iter().flatten().collect();
    rules.sort_by(|x, y| deglex(&x.lead, &y.lead));
    Ok(RuleSet::from_rules(rules))
}

/// Normal words of a finite-dimensional quotient, in degree-lex order.
///
/// Fails with `DimensionMismatch` once more than `limit` words are found.
pub fn normal_words<K: Scalar>(set: &RuleSet<K>, alphabet: usize, limit: usize) -> Result<Vec<Word>> {
    let mut out: Vec<Word> = vec![Vec::new()];
    let mut frontier: Vec<Word> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..alphabet as u8 {
                let mut nw = w.clone();
                nw.push(x);
                if !set.has_suffix_lead(&nw) {
                    next.push(nw);
                }
            }
        }
        next.sort_by(|a, b| deglex(a, b));
        out.extend(next.iter().cloned());
        if out.len() > limit {
            return Err(Error::DimensionMismatch {
                found: out.len(),
                expected: limit,
            });
        }
        frontier = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Rational};

    fn p(terms: &[(&[u8], i64)]) -> NcPoly<Rational> {
        terms.iter().map(|(w, c)| (w.to_vec(), rat(*c, 1))).collect()
    }

    #[test]
    fn symmetric_group_s3() {
        // a^2 = 1, b^2 = 1, aba = bab: the group algebra of S_3.
        let inputs = vec![
            p(&[(&[0, 0], 1), (&[], -1)]),
            p(&[(&[1, 1], 1), (&[], -1)]),
            p(&[(&[0, 1, 0], 1), (&[1, 0, 1], -1)]),
        ];
        let gb = complete(inputs, 10_000).unwrap();
        let words = normal_words(&gb, 2, 100).unwrap();
        assert_eq!(words.len(), 6);
    }

    #[test]
    fn commutative_truncated() {
        // xy = yx, x^2 = 0, y^3 = 0: dimension 6.
        let inputs = vec![
            p(&[(&[1, 0], 1), (&[0, 1], -1)]),
            p(&[(&[0, 0], 1)]),
            p(&[(&[1, 1, 1], 1)]),
        ];
        let gb = complete(inputs, 10_000).unwrap();
        assert_eq!(normal_words(&gb, 2, 100).unwrap().len(), 6);
    }
}
