//! Reading and writing multigraphs in MGR text and JSON.
//!
//!     cargo run --example graph_io

use steffenlab::format::{parse, parse_any, serialize, to_json};
use steffenlab::Multigraph;

fn main() -> steffenlab::Result<()> {
    // Endpoints may come in any order and repeated pairs accumulate.
    let g = Multigraph::build(3, &[(1, 0, 2), (2, 1, 1), (0, 1, 1)])?;
    let text = serialize(&g);
    print!("{text}");
    assert_eq!(parse(&text)?, g);

    let json = to_json(&g);
    println!("{json}");
    assert_eq!(parse_any(&json)?, g);

    // Comments and blank lines are ignored; errors carry line numbers.
    let commented = "# triangle with a doubled side\nn 3\n\ne 0 1 2\ne 1 2 1\ne 0 2 1\n";
    println!("{:?}", parse(commented)?.basic_invariants());
    match parse("n 2\ne 0 0 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
