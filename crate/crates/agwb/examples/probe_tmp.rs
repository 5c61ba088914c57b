use agwb::enumerate::EnumerationTask;
use std::time::Instant;

fn main() {
    // Time single shards at order 5: prefix [0,0] and a denser one.
    for prefix in [vec![0usize, 0], vec![0, 1]] {
        let task = EnumerationTask::with_prefix(5, prefix.clone(), &[], false).unwrap();
        let start = Instant::now();
        let count = task.run().count();
        println!("shard {prefix:?}: {count} tables in {} ms", start.elapsed().as_millis());
    }
}
