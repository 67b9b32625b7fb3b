use std::collections::BTreeSet;

use remmelkit::bijection::{
    avoiders, check_sum_condition, gm_map, random_explicit_pair, BijectionMachine, PartitionFamily,
};
use remmelkit::objects::Partition;

#[test]
fn glaisher_pair_for_three() {
    let a = PartitionFamily::Multiples { m: 3 };
    let b = PartitionFamily::Repeated { m: 3 };
    for n in 0..=12 {
        assert!(check_sum_condition(&a, &b, n).unwrap());
        let m = BijectionMachine::new(a.clone(), b.clone(), n).unwrap();
        let images: BTreeSet<Partition> = m.map_all().unwrap().into_iter().map(|(_, y)| y).collect();
        let target: BTreeSet<Partition> = avoiders(&b, n).into_iter().collect();
        assert_eq!(images, target, "n={n}");
    }
}

#[test]
fn random_pairs_give_bijections() {
    for seed in 0..6 {
        let (a, b) = random_explicit_pair(seed, 8, 3);
        for n in 0..=10 {
            let m = BijectionMachine::new(a.clone(), b.clone(), n).unwrap();
            let pairs = m.map_all().unwrap();
            let images: BTreeSet<Partition> = pairs.iter().map(|(_, y)| y.clone()).collect();
            assert_eq!(images.len(), pairs.len());
            assert_eq!(images, avoiders(&b, n).into_iter().collect::<BTreeSet<_>>());
        }
    }
}

#[test]
fn euler_counts_to_25() {
    for n in 0..=25 {
        assert_eq!(
            avoiders(&PartitionFamily::EvenParts, n).len(),
            avoiders(&PartitionFamily::repeated(), n).len()
        );
    }
}

#[test]
fn wrapper_rejects_non_avoiders() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    assert!(gm_map(&PartitionFamily::EvenParts, &PartitionFamily::repeated(), 3, &lambda).is_err());
}
