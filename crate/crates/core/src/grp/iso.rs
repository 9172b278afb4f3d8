use super::FiniteGroup;

fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = vec![0];
    // prefer high-order elements so few generators are needed
    let mut elems: Vec<usize> = (0..g.order()).collect();
    elems.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    for x in elems {
        if sub.len() == g.order() {
            break;
        }
        if sub.binary_search(&x).is_err() {
            gens.push(x);
            sub = g.generated_subgroup(&gens);
        }
    }
    gens
}

fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let img = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
        i += 1;
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if hit[m] {
            return None;
        }
        hit[m] = true;
    }
    Some(map)
}

/// An isomorphism `G -> H` as an image table, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let mut og: Vec<u64> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let mut oh: Vec<u64> = (0..h.order()).map(|x| h.element_order(x)).collect();
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return None;
    }
    let gens = greedy_generators(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..h.order()).filter(|&t| h.element_order(t) == g.element_order(s)).collect())
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, v)| v[c]).collect();
        if let Some(m) = extend(g, h, &gens, &imgs) {
            return Some(m);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == gens.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}
