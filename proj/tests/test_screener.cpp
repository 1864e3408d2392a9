#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>

#include "moireq/screener.hpp"

using namespace moireq;

namespace {

std::string sample_path() {
  return std::string(MOIREQ_DATA_DIR) + "/materials_sample.csv";
}

std::vector<MaterialRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return load_materials_csv(in);
}

constexpr const char* kHeader =
    "name,a_nm,layer_symmetry,band_gap_eV,binding_energy_meV_A2,source\n";

}  // namespace

TEST_CASE("csv parsing: happy path with whitespace tolerance") {
  auto recs = parse(std::string(kHeader) +
                    "mat-X, 0.42 ,square,1.5, 30.0 ,db\n"
                    "\n"
                    "mat-Y,0.3,trigonal,2.0,10.0,db\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "mat-X");
  CHECK(recs[0].a_nm == doctest::Approx(0.42));
  CHECK(recs[0].layer_symmetry == "square");
  CHECK(recs[0].band_gap_ev == doctest::Approx(1.5));
  CHECK(recs[0].binding_energy_mev_a2 == doctest::Approx(30.0));
  CHECK(recs[0].source == "db");
  CHECK(recs[1].name == "mat-Y");
}

TEST_CASE("csv parsing: errors cite the data row") {
  CHECK_THROWS_WITH_AS(parse(""), "materials table is empty", std::runtime_error);

  CHECK_THROWS_AS(parse("name,a_nm,gap\n"), std::runtime_error);

  // second data row has a malformed number
  try {
    parse(std::string(kHeader) +
          "ok-1,0.4,square,1.0,10.0,db\n"
          "bad-2,0.4,square,oops,10.0,db\n");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("band_gap_eV") != std::string::npos);
  }

  // blank lines do not advance the row counter
  try {
    parse(std::string(kHeader) +
          "ok-1,0.4,square,1.0,10.0,db\n"
          "\n"
          "bad-2,0.4,square,1.0,-3.0,db\n");
    FAIL("expected a validation error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }

  CHECK_THROWS_AS(parse(std::string(kHeader) + "short-row,0.4,square\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse(std::string(kHeader) + "zero-a,0.0,square,1.0,10.0,db\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse(std::string(kHeader) + ",0.4,square,1.0,10.0,db\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse(std::string(kHeader) + "trail,0.4,square,1.0x,10.0,db\n"),
                  std::runtime_error);
}

TEST_CASE("file loader") {
  auto recs = load_materials_csv_file(sample_path());
  CHECK(recs.size() == 10);
  CHECK_THROWS_AS(load_materials_csv_file("/does/not/exist.csv"), std::runtime_error);
}

TEST_CASE("screening the sample set with default criteria") {
  auto recs = load_materials_csv_file(sample_path());
  ScreenReport report = screen_materials(recs);

  CHECK(report.kept.size() == 7);
  CHECK(report.rejected.size() == 3);

  // metals fall below the exclusive lower gap bound
  for (const auto& rej : report.rejected) {
    const bool metal = rej.record.band_gap_ev == 0.0;
    const bool too_wide = rej.record.band_gap_ev > 5.0;
    CHECK((metal || too_wide));
  }

  auto find = [&](const std::string& name) -> const ScreenedMaterial& {
    for (const auto& s : report.kept)
      if (s.record.name == name) return s;
    throw std::runtime_error("not kept: " + name);
  };

  // inclusive upper bound keeps the 5.0 eV entry
  CHECK_NOTHROW(find("widegap-C"));
  CHECK_THROWS(find("uvgap-D"));
  CHECK_THROWS(find("metal-B"));

  // bonding class at the threshold: 25.0 is not vdW, 24.9 is
  CHECK_FALSE(find("border-G").van_der_waals);
  CHECK(find("layered-F").van_der_waals);
  CHECK(find("rocksalt-H").van_der_waals == false);
  CHECK(find("narrowgap-I").van_der_waals);

  // layer symmetry maps onto the dot lattice and its point group
  CHECK(find("rocksalt-A").dot_lattice == "square");
  CHECK(find("rocksalt-A").point_group == "D4");
  CHECK(find("layered-F").dot_lattice == "triangular");
  CHECK(find("layered-F").point_group == "D3");
  CHECK(find("layered-E").dot_lattice == "triangular");
  CHECK(find("layered-E").point_group == "D6");
}

TEST_CASE("ranking: binding strength descending, names break ties") {
  auto recs = load_materials_csv_file(sample_path());
  auto ranked = rank_materials(screen_materials(recs));
  REQUIRE(ranked.size() == 7);
  const char* want[] = {"rocksalt-H", "rocksalt-A", "border-G", "layered-F",
                        "widegap-C",  "layered-E",  "narrowgap-I"};
  for (size_t i = 0; i < ranked.size(); ++i) CHECK(ranked[i].record.name == want[i]);
  CHECK(ranked.front().record.binding_energy_mev_a2 == doctest::Approx(61.3));
  CHECK(ranked.back().record.binding_energy_mev_a2 == doctest::Approx(8.0));

  // tie on binding: alphabetical order decides
  auto tied = parse(std::string(kHeader) +
                    "zeta,0.4,square,1.0,20.0,db\n"
                    "alpha,0.4,square,1.0,20.0,db\n"
                    "mid,0.4,square,1.0,21.0,db\n");
  auto tr = rank_materials(screen_materials(tied));
  REQUIRE(tr.size() == 3);
  CHECK(tr[0].record.name == "mid");
  CHECK(tr[1].record.name == "alpha");
  CHECK(tr[2].record.name == "zeta");
}

TEST_CASE("criteria knobs") {
  auto recs = load_materials_csv_file(sample_path());

  ScreenCriteria narrow;
  narrow.gap_min_ev = 1.0;
  narrow.gap_max_ev = 2.0;
  ScreenReport r = screen_materials(recs, narrow);
  for (const auto& s : r.kept) {
    CHECK(s.record.band_gap_ev > 1.0);
    CHECK(s.record.band_gap_ev <= 2.0);
  }
  CHECK(r.kept.size() == 2);  // rocksalt-A (1.20), layered-E (1.85)

  ScreenCriteria strict;
  strict.vdw_threshold_mev_a2 = 15.0;
  ScreenReport r2 = screen_materials(recs, strict);
  int n_vdw = 0;
  for (const auto& s : r2.kept) n_vdw += s.van_der_waals;
  CHECK(n_vdw == 2);  // layered-E (14.5), narrowgap-I (8.0)

  ScreenCriteria empty;
  empty.gap_min_ev = 3.0;
  empty.gap_max_ev = 3.0;
  CHECK_THROWS_AS(screen_materials(recs, empty), std::domain_error);
}

TEST_CASE("unknown layer symmetry is kept but flagged") {
  auto recs = parse(std::string(kHeader) + "odd,0.4,cubic,1.0,10.0,db\n");
  ScreenReport r = screen_materials(recs);
  REQUIRE(r.kept.size() == 1);
  CHECK(r.kept[0].dot_lattice == "unknown");
  CHECK(r.kept[0].point_group == "unknown");
}
