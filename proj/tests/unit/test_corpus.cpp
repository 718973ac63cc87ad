#include <doctest.h>

#include <sstream>

#include "kilogram/corpus/annotation.hpp"
#include "kilogram/corpus/io.hpp"
#include "kilogram/corpus/sets.hpp"
#include "kilogram/corpus/stats.hpp"
#include "support/synthetic.hpp"

using namespace kilogram::corpus;

namespace {

Annotation ann(const std::string& tangram, const std::string& worker, const std::string& whole,
               std::vector<std::pair<std::vector<int>, std::string>> parts, Collection c = Collection::Sparse) {
    Annotation a;
    a.tangramId = tangram;
    a.workerId = worker;
    a.whole = whole;
    for (auto& [ids, label] : parts) a.parts.push_back(make_part(ids, label));
    a.collection = c;
    return make_annotation(std::move(a));
}

Annotation simple(const std::string& tangram, const std::string& worker, Collection c = Collection::Sparse) {
    return ann(tangram, worker, "dog", {{{1, 2, 3, 4, 5, 6, 7}, "body"}}, c);
}

std::vector<std::string> ids(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("t" + std::to_string(i));
    return out;
}

}  // namespace

TEST_CASE("annotation validation") {
    Annotation a = simple("t1", "w1");
    CHECK_FALSE(check_annotation(a));
    CHECK(a.annotationId == "t1#w1");

    SUBCASE("incomplete") {
        a.parts = {make_part({1, 2, 3, 4, 5, 6}, "body")};
        CHECK(check_annotation(a) == AnnotationIssue::IncompleteSegmentation);
    }
    SUBCASE("overlap") {
        a.parts = {make_part({1, 2, 3, 4}, "a"), make_part({4, 5, 6, 7}, "b")};
        CHECK(check_annotation(a) == AnnotationIssue::OverlappingParts);
    }
    SUBCASE("out of range") {
        a.parts = {make_part({0, 1, 2, 3, 4, 5, 6, 7}, "a")};
        CHECK(check_annotation(a) == AnnotationIssue::PieceOutOfRange);
    }
    SUBCASE("empty whole") {
        a.whole = "  ";
        CHECK(check_annotation(a) == AnnotationIssue::EmptyWhole);
    }
    SUBCASE("empty label") {
        a.parts[0].label = "";
        CHECK(check_annotation(a) == AnnotationIssue::EmptyLabel);
    }
    SUBCASE("unknown label is fine") {
        a.parts[0].label = "UNKNOWN";
        CHECK_FALSE(check_annotation(a));
    }
    CHECK(a.parts.size() <= 7);
}

TEST_CASE("analysis set rejects repeated workers") {
    AnalysisSet set("s");
    set.add(simple("t1", "w1"));
    set.add(simple("t1", "w2"));
    set.add(simple("t2", "w1"));
    CHECK_THROWS_AS(set.add(simple("t1", "w1")), DuplicateAnnotation);
    CHECK(set.tangram_count() == 2);
    CHECK(set.annotation_count() == 3);
}

TEST_CASE("corpus io round trip") {
    const auto corpus = kgtest::synthetic_corpus(5, 4, 17);
    std::stringstream ss;
    write_corpus(ss, corpus);
    CHECK(ss.str().rfind(std::string(kCorpusHeader), 0) == 0);
    CHECK(read_corpus(ss) == corpus);
}

TEST_CASE("corpus io errors carry line numbers") {
    std::stringstream ss;
    ss << kCorpusHeader << "\n" << write_annotation_line(simple("t1", "w1")) << "\n{not json}\n";
    try {
        read_corpus(ss);
        FAIL("accepted garbage");
    } catch (const CorpusFormatError& e) {
        CHECK(e.line() == 3);
    }
    std::stringstream dup;
    dup << write_annotation_line(simple("t1", "w1")) << "\n" << write_annotation_line(simple("t1", "w1")) << "\n";
    CHECK_THROWS_AS(read_corpus(dup), CorpusFormatError);
}

TEST_CASE("splits: full configuration") {
    auto all = ids(1016);
    const std::vector<std::string> dense(all.begin(), all.begin() + 74);
    const auto s = build_splits(all, dense, 5);
    CHECK(s.train.size() == 692);
    CHECK(s.dev.size() == 125);
    CHECK(s.test.size() == 125);
    CHECK(s.testDense.size() == 74);
    CHECK(s.split_of("t0") == "test-dense");
    CHECK(build_splits(all, dense, 5) == s);
    std::reverse(all.begin(), all.end());
    CHECK(build_splits(all, dense, 5) == s);
    CHECK_FALSE(build_splits(all, dense, 6) == s);
}

TEST_CASE("splits: errors") {
    auto all = ids(10);
    all.push_back("t1");
    CHECK_THROWS_AS(build_splits(all, {}, 0), SplitError);
    CHECK_THROWS_AS(build_splits(ids(10), {"zz"}, 0), SplitError);
}

TEST_CASE("analysis sets") {
    std::vector<Annotation> anns;
    // Sparse tangram with 10 annotations.
    for (int w = 0; w < 10; ++w) anns.push_back(simple("s1", "w" + std::to_string(w)));
    // Dense tangram: 10 sparse and 43 later annotations.
    for (int w = 0; w < 10; ++w) anns.push_back(simple("d1", "w" + std::to_string(w)));
    for (int w = 10; w < 53; ++w) anns.push_back(simple("d1", "w" + std::to_string(w), Collection::Dense));
    // Dense tangram annotated only in the later collection.
    for (int w = 0; w < 60; ++w) anns.push_back(simple("d2", "w" + std::to_string(w), Collection::Dense));

    const auto sets = build_analysis_sets(anns, {"d1", "d2"}, 9);
    CHECK(sets.full.annotations("s1").size() == 10);
    CHECK(sets.full.annotations("d1").size() == 10);
    CHECK(sets.full.annotations("d2").size() == 10);
    CHECK(sets.dense.annotations("d1").size() == 53);
    CHECK(sets.dense.annotations("d2").size() == 60);
    CHECK_FALSE(sets.dense.contains("s1"));
    CHECK(sets.dense10.annotations("d1").size() == 10);
    CHECK(sets.dense10.annotations("d2") == sets.full.annotations("d2"));
    for (const auto& a : sets.dense10.annotations("d1")) CHECK(a.collection == Collection::Sparse);

    const auto again = build_analysis_sets(anns, {"d1", "d2"}, 9);
    CHECK(again.full.annotations("d2") == sets.full.annotations("d2"));

    CHECK_THROWS_AS(build_analysis_sets(anns, {"s1"}, 9), InsufficientAnnotations);
}

TEST_CASE("dataset statistics") {
    AnalysisSet set("s");
    set.add(ann("t1", "w1", "a running dog", {{{1, 2, 3}, "head"}, {{4, 5, 6, 7}, "long tail"}}));
    set.add(ann("t1", "w2", "dogs", {{{1, 2, 3, 4, 5, 6, 7}, "body"}}));
    const auto s = dataset_stats(set);
    CHECK(s.tangrams == 1);
    CHECK(s.annotations == 2);
    CHECK(s.wholeLength.mean == doctest::Approx(2.0));
    CHECK(s.wholeLength.sd == doctest::Approx(1.0));  // population sd of {3, 1}
    CHECK(s.partsPerShape.mean == doctest::Approx(1.5));
    CHECK(s.piecesPerPart.mean == doctest::Approx(14.0 / 3.0));  // {3, 4, 7}
    CHECK(s.partLength.mean == doctest::Approx(4.0 / 3.0));
    CHECK(s.wholeVocabulary == 3);  // a, run, dog
    CHECK(s.partVocabulary == 4);   // head, long, tail, bodi
    CHECK(s.overallVocabulary == 7);
}
