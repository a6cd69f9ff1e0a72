use dmp_core::bounds::TheoremId;
use dmp_core::campaign::{run_campaign, write_csv, write_json, CampaignConfig, RandomModel, TargetPolicy};

fn bytes(config: &CampaignConfig) -> (Vec<u8>, Vec<u8>) {
    let report = run_campaign(config).unwrap();
    let (mut csv, mut json) = (Vec::new(), Vec::new());
    write_csv(&report.records, &mut csv).unwrap();
    write_json(&report.records, &mut json).unwrap();
    (csv, json)
}

#[test]
fn identical_configs_give_identical_bytes() {
    for theorem in TheoremId::ALL {
        let model = match theorem {
            TheoremId::TreeLeafAdd | TheoremId::TreeLeafDelete => RandomModel::RandomTree { n: 9 },
            _ => RandomModel::Gnp { n: 6, p: 0.5 },
        };
        let mut config = CampaignConfig::new(theorem, model, 40, 99);
        config.jobs = Some(4);
        let first = bytes(&config);
        config.jobs = Some(1);
        assert_eq!(bytes(&config), first, "{theorem}");
    }
}

#[test]
fn seeds_change_the_records() {
    let config = CampaignConfig::new(TheoremId::EdgeDelete, RandomModel::Gnp { n: 8, p: 0.4 }, 20, 1);
    let other = CampaignConfig { seed: 2, ..config.clone() };
    assert_ne!(bytes(&config), bytes(&other));
}

#[test]
fn reference_campaigns_have_no_failures() {
    let runs = [
        (TheoremId::EdgeAdd, RandomModel::Gnp { n: 10, p: 0.3 }, 200, 42),
        (TheoremId::TreeLeafDelete, RandomModel::RandomTree { n: 12 }, 200, 7),
        (TheoremId::ContractionTriangleFree, RandomModel::RandomBipartite { n1: 6, n2: 6, p: 0.4 }, 100, 1),
    ];
    for (theorem, model, trials, seed) in runs {
        let report = run_campaign(&CampaignConfig::new(theorem, model, trials, seed)).unwrap();
        assert_eq!(report.summary.failed, 0, "{theorem}");
        assert!(report.summary.checked > 0);
        assert!(report.records.iter().all(|r| r.seed == seed));
        assert!(report.records.windows(2).all(|w| w[0].trial <= w[1].trial));
    }
}

#[test]
fn dense_gnp_contraction_is_mostly_skipped() {
    let report = run_campaign(&CampaignConfig::new(
        TheoremId::ContractionTriangleFree,
        RandomModel::Gnp { n: 8, p: 0.9 },
        100,
        0,
    ))
    .unwrap();
    assert!(report.summary.skipped > 90);
}

#[test]
fn sampled_vertex_addition() {
    let config = CampaignConfig {
        policy: TargetPolicy::Sampled(3),
        ..CampaignConfig::new(TheoremId::VertexAddGeneral, RandomModel::Gnp { n: 12, p: 0.3 }, 30, 5)
    };
    let report = run_campaign(&config).unwrap();
    assert_eq!(report.records.len(), 90);
    assert_eq!(report.summary.failed, 0);
}
