use crate::graph::{Graph, Vertex};

/// Visits every directed simple path on `k` vertices. `extend` is asked
/// about each proper prefix before it is grown; `visit` returns `false` to
/// stop the walk. Returns `false` if the walk was stopped.
pub(crate) fn walk_paths(
    g: &Graph,
    k: usize,
    extend: &dyn Fn(&[Vertex]) -> bool,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    fn go(
        g: &Graph,
        k: usize,
        path: &mut Vec<Vertex>,
        extend: &dyn Fn(&[Vertex]) -> bool,
        visit: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if path.len() == k {
            return visit(path);
        }
        if !extend(path) {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            path.push(w);
            let go_on = go(g, k, path, extend, visit);
            path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut path = Vec::with_capacity(k);
    for v in g.vertices() {
        path.push(v);
        let go_on = go(g, k, &mut path, extend, visit);
        path.pop();
        if !go_on {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle};

    fn count(g: &Graph, k: usize) -> usize {
        let mut n = 0;
        walk_paths(g, k, &|_| true, &mut |_| {
            n += 1;
            true
        });
        n
    }

    #[test]
    fn directed_path_counts() {
        // each of n starts, two directions
        assert_eq!(count(&cycle(7), 4), 14);
        assert_eq!(count(&cycle(4), 4), 8);
        assert_eq!(count(&cycle(3), 4), 0);
        // n (n-1) (n-2) (n-3) in K_n
        assert_eq!(count(&complete(5), 4), 120);
        assert_eq!(count(&complete(5), 1), 5);
    }

    #[test]
    fn pruning_and_stopping() {
        let g = complete(5);
        let mut n = 0;
        walk_paths(&g, 3, &|p| p[0] == 0, &mut |_| {
            n += 1;
            true
        });
        assert_eq!(n, 12);
        let mut seen = 0;
        let finished = walk_paths(&g, 3, &|_| true, &mut |_| {
            seen += 1;
            seen < 5
        });
        assert!(!finished);
        assert_eq!(seen, 5);
    }
}
