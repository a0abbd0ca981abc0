use std::rc::Rc;

use rustc_hash::FxHashMap;

use super::compiled::{Compiled, NIL};
use super::{key, Cost, Engine, Key};
use crate::linkage::{Link, LinkLabel, Linkage, WordChoice};

#[derive(Clone, Default)]
struct Partial {
    links: Vec<Link>,
    choices: Vec<(usize, WordChoice)>,
}

impl Partial {
    fn join(a: &Partial, b: &Partial, extra: &[Link], choice: (usize, WordChoice)) -> Partial {
        let mut links = Vec::with_capacity(a.links.len() + b.links.len() + extra.len());
        links.extend_from_slice(&a.links);
        links.extend_from_slice(&b.links);
        links.extend_from_slice(extra);
        let mut choices = Vec::with_capacity(a.choices.len() + b.choices.len() + 1);
        choices.extend_from_slice(&a.choices);
        choices.extend_from_slice(&b.choices);
        choices.push(choice);
        Partial { links, choices }
    }
}

type Parts = Rc<Vec<Partial>>;

struct Enumerator {
    c: Rc<Compiled>,
    limit: usize,
    memo: FxHashMap<Key, Parts>,
}

impl Engine {
    /// Up to `limit` minimum-cost linkages in recursion order: the word `w`
    /// ascending, then its candidate disjuncts in table order, links to both
    /// ends before a link to `l` alone before a link to `r` alone.
    pub fn enumerate(&mut self, limit: usize) -> Vec<Linkage> {
        let target = self.min_cost();
        if !target.is_finite() || limit == 0 {
            return Vec::new();
        }
        let mut en = Enumerator {
            c: Rc::clone(&self.c),
            limit,
            memo: FxHashMap::default(),
        };
        let c = Rc::clone(&self.c);
        let n = c.words;
        let mut out: Vec<Partial> = Vec::new();
        for &d in &c.nil_left_nonempty[0] {
            let rd = c.disjuncts[0][d as usize].1;
            if self.cost(0, n, rd, NIL) == target {
                let sub = en.span(self, 0, n, rd, NIL);
                push_all(&mut out, &sub, &[], (0, WordChoice::Disjunct(d as usize)), limit);
            }
        }
        if self.cost(0, n, NIL, NIL) == target {
            let sub = en.span(self, 0, n, NIL, NIL);
            push_all(&mut out, &sub, &[], (0, WordChoice::Isolated), limit);
        }
        out.into_iter()
            .map(|p| {
                let mut choices = vec![WordChoice::Isolated; n];
                for (w, ch) in p.choices {
                    choices[w] = ch;
                }
                Linkage::new(p.links, choices)
            })
            .collect()
    }
}

fn push_all(out: &mut Vec<Partial>, sub: &[Partial], extra: &[Link], choice: (usize, WordChoice), limit: usize) {
    let empty = Partial::default();
    for p in sub {
        if out.len() >= limit {
            return;
        }
        out.push(Partial::join(p, &empty, extra, choice));
    }
}

fn push_product(
    out: &mut Vec<Partial>,
    a: &[Partial],
    b: &[Partial],
    extra: &[Link],
    choice: (usize, WordChoice),
    limit: usize,
) {
    for x in a {
        for y in b {
            if out.len() >= limit {
                return;
            }
            out.push(Partial::join(x, y, extra, choice));
        }
    }
}

impl Enumerator {
    /// Linkages of the span at its minimum cost; word `lw`'s choice is made
    /// by the caller, interior words' choices are recorded here.
    fn span(&mut self, e: &mut Engine, lw: usize, rw: usize, l: u32, r: u32) -> Parts {
        if rw == lw + 1 {
            return Rc::new(if l == NIL && r == NIL {
                vec![Partial::default()]
            } else {
                vec![]
            });
        }
        let k = key(lw, rw, l, r);
        if let Some(p) = self.memo.get(&k) {
            return Rc::clone(p);
        }
        let target = e.cost(lw, rw, l, r);
        let mut out = Vec::new();
        if target.is_finite() {
            self.fill(e, lw, rw, l, r, target, &mut out);
        }
        let parts = Rc::new(out);
        self.memo.insert(k, Rc::clone(&parts));
        parts
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(&mut self, e: &mut Engine, lw: usize, rw: usize, l: u32, r: u32, target: Cost, out: &mut Vec<Partial>) {
        let c = Rc::clone(&self.c);
        let limit = self.limit;
        if l == NIL && r == NIL {
            let next = lw + 1;
            let null = [Link::null(lw)];
            for &d in &c.nil_left_nonempty[next] {
                let rd = c.disjuncts[next][d as usize].1;
                if e.cost(next, rw, rd, NIL).succ() == target {
                    let sub = self.span(e, next, rw, rd, NIL);
                    push_all(out, &sub, &null, (next, WordChoice::Disjunct(d as usize)), limit);
                }
            }
            if e.cost(next, rw, NIL, NIL).succ() == target {
                let sub = self.span(e, next, rw, NIL, NIL);
                push_all(out, &sub, &null, (next, WordChoice::Isolated), limit);
            }
            return;
        }
        for w in lw + 1..rw {
            for d in c.candidates(w, l, r) {
                let (ld, rd) = c.disjuncts[w][d as usize];
                let choice = (w, WordChoice::Disjunct(d as usize));
                let (ll, lr) = (c.next(l), c.next(ld));
                let (rl, rr) = (c.next(rd), c.next(r));
                let lc = if c.link_ok(l, ld, w - lw) {
                    e.cost(lw, w, ll, lr)
                } else {
                    Cost::INFINITE
                };
                if l != NIL && !lc.is_finite() {
                    continue;
                }
                let rc = if c.link_ok(rd, r, rw - w) {
                    e.cost(w, rw, rl, rr)
                } else {
                    Cost::INFINITE
                };
                let l_link = || Link::new(lw, w, LinkLabel::Connector(c.label(l, ld)));
                let r_link = || Link::new(w, rw, LinkLabel::Connector(c.label(rd, r)));
                if lc.plus(rc) == target {
                    let a = self.span(e, lw, w, ll, lr);
                    let b = self.span(e, w, rw, rl, rr);
                    push_product(out, &a, &b, &[l_link(), r_link()], choice, limit);
                }
                if lc.is_finite() && lc.plus(e.cost(w, rw, rd, r)) == target {
                    let a = self.span(e, lw, w, ll, lr);
                    let b = self.span(e, w, rw, rd, r);
                    push_product(out, &a, &b, &[l_link()], choice, limit);
                }
                if rc.is_finite() && l == NIL && rc.plus(e.cost(lw, w, NIL, ld)) == target {
                    let a = self.span(e, lw, w, NIL, ld);
                    let b = self.span(e, w, rw, rl, rr);
                    push_product(out, &a, &b, &[r_link()], choice, limit);
                }
                if out.len() >= limit {
                    return;
                }
            }
        }
    }
}
