//! Writes fig1.svg, fig2.svg and fig3.svg to the given directory (default
//! the current one).

use std::path::PathBuf;

use descartes_dbz::cli::{cmd_render, Figure, RenderTarget};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for name in ["fig1", "fig2", "fig3"] {
        let figure = Figure::from_name(name).unwrap();
        let (r1, r2) = figure.default_radii();
        let out = dir.join(format!("{name}.svg"));
        match cmd_render(&RenderTarget::Figure { figure, r1, r2 }, &out) {
            Ok(()) => println!("wrote {} (r1 = {r1}, r2 = {r2})", out.display()),
            Err(e) => {
                eprintln!("{name}: {e}");
                std::process::exit(e.code);
            }
        }
    }
}
