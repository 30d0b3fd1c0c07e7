//! Numerical invariants of tuples: F-support, irreducibility, component
//! counts, dimensions and smoothness evidence.
//!
//! ```text
//! cargo run --example invariants
//! ```

use cxkit::invariants::{component_count, dl_dimension, f_support, is_irreducible_dl, smoothness_certificate, strata_count, DLTuple};
use cxkit::twist::registry_twist;
use cxkit::Word;

fn show(name: &str, words: &[&str]) -> cxkit::Result<()> {
    let tw = registry_twist(name)?;
    let sys = tw.system();
    let words: Vec<Word> = words.iter().map(|w| Word::parse(w, sys.rank())).collect::<Result<_, _>>()?;
    let t = DLTuple::from_words(sys, &words)?;
    let support: Vec<String> = f_support(&tw, &t).iter().map(|b| b.to_string()).collect();
    let poly = component_count(&tw, &t)?;
    let shown: Vec<String> = words.iter().map(|w| format!("({w})")).collect();
    println!("{name} {}", if shown.is_empty() { "()".to_string() } else { shown.join("") });
    println!("  F-support [{}]  irreducible {}", support.join(", "), is_irreducible_dl(&tw, &t));
    println!("  components {poly}  at q=2: {}", poly.evaluate(2)?);
    println!("  dimension {}  strata {}", dl_dimension(sys, &t), strata_count(sys, &t)?);
    let v = smoothness_certificate(sys, &t)?;
    println!("  smoothness {:?}", v.kind);
    Ok(())
}

fn main() -> cxkit::Result<()> {
    show("A2", &[])?;
    show("2A2", &[])?;
    show("2B2", &[])?;
    show("A3", &["1", "3"])?;
    show("2A3", &["1 3", "2"])?;
    show("A3", &["2 1 3 2"])?;
    show("B2", &["1 2 1 2"])?;

    // Rationally singular elements of A3.
    let tw = registry_twist("A3")?;
    let sys = tw.system();
    for x in sys.elements()? {
        if !cxkit::invariants::is_rationally_smooth(sys, &x)? {
            println!("A3 singular: {}  P = {}", sys.display_element(&x), sys.poincare_polynomial(&x)?);
        }
    }
    Ok(())
}
