//! Reduce a word to a minimal length element of some F-class, printing
//! each move of the certificate.
//!
//! ```text
//! cargo run --example reduce_word -- 2A3 "1 2 3 1"
//! ```

use cxkit::reduction::{reduce_word, verify_trace};
use cxkit::twist::registry_twist;
use cxkit::Word;

fn main() -> cxkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "2A3".to_string());
    let text = args.next().unwrap_or_else(|| "1 2 3 1".to_string());
    let tw = registry_twist(&name)?;
    let w = Word::parse(&text, tw.system().rank())?;

    let result = reduce_word(&tw, &w)?;
    let words = result.words(&tw).expect("own trace replays");
    println!("{name}: {w}");
    for (mv, after) in result.trace.iter().zip(&words[1..]) {
        println!("  {:<20} {after}", mv.kind());
    }
    println!(
        "final {} (length {}), class of size {} with min length {}",
        result.final_word,
        result.final_word.len(),
        result.class.size,
        result.class.min_length
    );
    match verify_trace(&tw, &w, &result) {
        Ok(()) => println!("certificate verified"),
        Err(v) => println!("certificate rejected: {v}"),
    }
    Ok(())
}
