use super::connector::ConnectorName;
use super::expr::{Disjunct, ExpressionTree};
use super::Dictionary;

/// Adds `NL` variants of every disjunct plus the three connector-only
/// disjuncts every word receives. `NL` always occupies the nearest slot of a
/// list, since a null link spans adjacent words. Duplicates are dropped.
///
/// For `d = ((l..)(r..))` the output holds `d`, `d` with `NL` added on the
/// right, on the left and on both sides, then `((NL)())`, `(()(NL))` and
/// `((NL)(NL))`.
pub fn extend_disjuncts(disjuncts: &[Disjunct]) -> Vec<Disjunct> {
    let nl = ConnectorName::null_link;
    let with_nl = |list: &[ConnectorName]| {
        let mut v = Vec::with_capacity(list.len() + 1);
        v.push(nl());
        v.extend(list.iter().cloned());
        v
    };
    let mut out: Vec<Disjunct> = Vec::with_capacity(disjuncts.len() * 4 + 3);
    let mut push = |d: Disjunct| {
        if !out.contains(&d) {
            out.push(d);
        }
    };
    for d in disjuncts {
        push(d.clone());
        push(Disjunct::new(d.left.clone(), with_nl(&d.right)));
        push(Disjunct::new(with_nl(&d.left), d.right.clone()));
        push(Disjunct::new(with_nl(&d.left), with_nl(&d.right)));
    }
    push(Disjunct::new(vec![nl()], vec![]));
    push(Disjunct::new(vec![], vec![nl()]));
    push(Disjunct::new(vec![nl()], vec![nl()]));
    out
}

/// The extended grammar whose legal linkages correspond to chained linkages
/// of `dict`. Only meant as a cross-check; parsing never needs it.
pub fn build_extended_dictionary(dict: &Dictionary) -> Dictionary {
    Dictionary::from_entries(dict.entries().map(|(word, tree)| {
        let extended = extend_disjuncts(&tree.expand());
        let tree = ExpressionTree::from_disjuncts(&extended).expect("extension is never empty");
        (word.to_owned(), tree)
    }))
}
