//! Positive braid monoid: greedy normal forms, braid equality,
//! Matsumoto paths between reduced words and square exposure.
//!
//! ```text
//! cargo run --example braid_normal_form
//! ```

use cxkit::braid::{braid_equal, expose_square, greedy_normal_form, matsumoto_path, replay, DEFAULT_BUDGET};
use cxkit::{CoxeterSystem, Word};

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn main() -> cxkit::Result<()> {
    let a2 = CoxeterSystem::build("A2")?;
    for w in ["1 2 1 2", "2 1 1", "1 2 2 1 1"] {
        let nf = greedy_normal_form(&a2, &word(w))?;
        let factors: Vec<String> = nf.factor_words(&a2).iter().map(|f| format!("[{f}]")).collect();
        println!("A2  {w:<10} -> {}", factors.join(" "));
    }
    println!("1 2 1 ~ 2 1 2: {}", braid_equal(&a2, &word("1 2 1"), &word("2 1 2"))?);
    println!("1 2 ~ 2 1:     {}", braid_equal(&a2, &word("1 2"), &word("2 1"))?);

    let a3 = CoxeterSystem::build("A3")?;
    let (from, to) = (word("1 2 1 3 2 1"), word("3 2 3 1 2 3"));
    let path = matsumoto_path(&a3, &from, &to, DEFAULT_BUDGET)?.expect("within budget");
    println!("A3  {from} => {to} in {} moves:", path.len());
    let mut current = from.clone();
    for mv in &path {
        current = mv.apply(&a3, &current)?;
        println!("    {mv:<24} {current}");
    }
    assert_eq!(replay(&a3, &from, &path)?, to);

    if let Some(sq) = expose_square(&a2, &word("1 2 1 2"))? {
        println!("A2  1 2 1 2 exposes a square in {} at position {}", sq.word, sq.position + 1);
    }
    Ok(())
}
