#include <doctest.h>

#include <cmath>

#include <omp.h>

#include "tpmi/errors.hpp"
#include "tpmi/presets.hpp"
#include "tpmi/scan.hpp"

using namespace tpmi;

TEST_SUITE("scan") {

TEST_CASE("default grid") {
  const auto c = preset("fig3a");
  const auto d = c.scan.delays();
  REQUIRE(d.size() == 2048);
  CHECK(d.front() == -60e-15);
  CHECK(d.back() == doctest::Approx(60e-15).epsilon(1e-15));
}

TEST_CASE("trace shape and symmetry") {
  const auto t = run_scan(preset("fig3a"));
  REQUIRE(t.rows.size() == 2048);
  CHECK(t.version == kLibraryVersion);
  CHECK(t.config.name == "fig3a");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[t.rows.size() - 1 - i];
    CHECK(a.g2 >= 0.0);
    CHECK(a.g2 == doctest::Approx(b.g2).epsilon(1e-9).scale(1.0));
    CHECK(a.g2 == doctest::Approx(a.background + a.hbt + a.omega + a.two_omega).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("serial and parallel scans are bit-identical") {
  const int saved = omp_get_max_threads();
  for (const auto& name : preset_names()) {
    const auto c = preset(name);
    const auto s = run_scan_serial(c);
    for (int threads : {1, 4}) {
      omp_set_num_threads(threads);
      const auto p = run_scan(c);
      REQUIRE(p.rows.size() == s.rows.size());
      bool same = true;
      for (std::size_t i = 0; i < s.rows.size(); ++i)
        same = same && p.rows[i].g2 == s.rows[i].g2 && p.rows[i].omega == s.rows[i].omega &&
               p.rows[i].hbt == s.rows[i].hbt && p.rows[i].two_omega == s.rows[i].two_omega;
      CHECK_MESSAGE(same, std::string(name));

      const TwoPhotonModel model(c);
      const auto d = c.scan.delays();
      std::vector<double> a(d.size()), b(d.size());
      scan_g2(model, d, a);
      scan_g2_serial(model, d, b);
      CHECK(a == b);
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("invalid and degenerate configs") {
  auto c = preset("fig3a");
  c.scan.points = 1;
  CHECK_THROWS_AS(run_scan(c), ValidationError);
  c = preset("fig5");
  c.polarizers.p3 = radians(90);
  c.polarizers.p1.reset();
  c.polarizers.p2 = radians(0);
  try {
    (void)run_scan(c);
    FAIL("expected DegenerateNormalization");
  } catch (const DegenerateNormalization& e) {
    CHECK(std::string(e.what()).find("arm 2") != std::string::npos);
  }
}

TEST_CASE("delay from mirror offset") {
  CHECK(delay_from_mirror_offset(1.5e-6) == doctest::Approx(1e-14).epsilon(1e-3));
  CHECK(delay_from_mirror_offset(-1e-6) < 0.0);
}

}
