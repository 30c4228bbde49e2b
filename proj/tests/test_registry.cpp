#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mvc/dimacs.hpp"
#include "mvc/registry.hpp"

using mvc::KnownOptimum;
using mvc::OptimaRegistry;

#ifndef MVC_REGISTRY_FILE
#error "MVC_REGISTRY_FILE must point at the shipped registry"
#endif

TEST_CASE("canonical_instance_name") {
  CHECK(mvc::canonical_instance_name("Brock800_1") == "brock800-1");
  CHECK(mvc::canonical_instance_name("C-FAT200-1") == "c-fat200-1");
  CHECK(mvc::canonical_instance_name("MANN_a81") == "mann-a81");
  CHECK(mvc::canonical_instance_name("sanr200_0.7") == "sanr200-0.7");
}

TEST_CASE("shipped registry loads and answers lookups") {
  OptimaRegistry registry = OptimaRegistry::load_file(MVC_REGISTRY_FILE);
  CHECK(registry.size() == 51);

  const KnownOptimum* cfat = registry.find("c-fat200-1");
  REQUIRE(cfat != nullptr);
  CHECK(cfat->n == 200);
  CHECK(cfat->optimal_cover == 188);
  CHECK(cfat->complemented);

  // Lookup is canonical: underscores and case do not matter.
  CHECK(registry.find("C-FAT200-1") == cfat);
  const KnownOptimum* brock = registry.find("Brock800_1");
  REQUIRE(brock != nullptr);
  CHECK(brock->optimal_cover == 777);
  CHECK(brock->cover_solver_size == 782);

  const KnownOptimum* k1800 = registry.find("k-1800");
  REQUIRE(k1800 != nullptr);
  CHECK(k1800->n == 1800);
  CHECK(k1800->optimal_cover == 1799);
  CHECK_FALSE(k1800->complemented);

  CHECK(registry.find("no-such-instance") == nullptr);
}

TEST_CASE("every registry row satisfies 0 <= optimal <= n") {
  OptimaRegistry registry = OptimaRegistry::load_file(MVC_REGISTRY_FILE);
  for (const KnownOptimum& row : registry.rows()) {
    CHECK(row.optimal_cover >= 0);
    CHECK(row.optimal_cover <= row.n);
  }
}

TEST_CASE("suspect published rows carry notes instead of assertions") {
  OptimaRegistry registry = OptimaRegistry::load_file(MVC_REGISTRY_FILE);
  const KnownOptimum* brock2 = registry.find("brock800-2");
  REQUIRE(brock2 != nullptr);
  CHECK(brock2->notes.find("misprint") != std::string::npos);
  const KnownOptimum* sanr = registry.find("sanr400-0.5");
  REQUIRE(sanr != nullptr);
  CHECK(sanr->notes.find("misprint") != std::string::npos);
}

TEST_CASE("registry round-trips byte for byte") {
  std::ifstream in(MVC_REGISTRY_FILE, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream original;
  original << in.rdbuf();

  std::istringstream reload(original.str());
  OptimaRegistry registry = OptimaRegistry::load(reload);
  std::ostringstream saved;
  registry.save(saved);
  CHECK(saved.str() == original.str());
}

TEST_CASE("registry rejects malformed rows") {
  const std::string header =
      "instance,n,optimal_cover,complemented,source,cover_solver_size,"
      "cover_solver_time_ms,notes";
  {
    std::istringstream bad(header + "\nx,10,11,false,src,,,\n");
    CHECK_THROWS_AS(OptimaRegistry::load(bad), mvc::ParseError);  // optimal > n
  }
  {
    std::istringstream bad(header + "\nx,10,9,maybe,src,,,\n");
    CHECK_THROWS_AS(OptimaRegistry::load(bad), mvc::ParseError);
  }
  {
    std::istringstream bad("wrong,header\n");
    CHECK_THROWS_AS(OptimaRegistry::load(bad), mvc::ParseError);
  }
  {
    std::istringstream bad(header + "\nx,10\n");
    CHECK_THROWS_AS(OptimaRegistry::load(bad), mvc::ParseError);
  }
}
