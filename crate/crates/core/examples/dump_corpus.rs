//! Regenerate the bundled example graphs as JSON files.
//!
//! Usage: cargo run -p surface-flows-core --example dump_corpus -- <dir>

use std::path::Path;

use surface_flows_core::corpus;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "graphs".to_string());
    std::fs::create_dir_all(&dir)?;
    let named = [
        ("loop", corpus::loop_graph()),
        ("digon", corpus::digon()),
        ("theta-planar", corpus::theta_planar()),
        ("theta-twisted", corpus::theta_twisted()),
        ("k4", corpus::k4_planar()),
        // bouquet files are named by loop count: bouquet2 has 2 loops
        // (genus 1), bouquet4 has 4 loops (genus 2)
        ("bouquet0", corpus::bouquet(0)),
        ("bouquet2", corpus::bouquet(1)),
        ("bouquet4", corpus::bouquet(2)),
        ("dumbbell", corpus::dumbbell()),
    ];
    for (name, graph) in named {
        let path = Path::new(&dir).join(format!("{name}.json"));
        let text = serde_json::to_string_pretty(&graph.to_json()).expect("serializable");
        std::fs::write(&path, text + "\n")?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
