#include "kcn/assoc_rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcn {

namespace {

std::vector<Transaction> collect(const std::vector<ArticleRecord>& corpus,
                                 const TimeWindow* window) {
    std::vector<Transaction> out;
    for (const ArticleRecord& rec : corpus) {
        if (window && !window->contains(rec.year)) continue;
        if (rec.keywords.empty()) continue;
        Transaction t;
        t.article_id = rec.id;
        t.items = rec.keywords;  // already sorted and unique
        out.push_back(std::move(t));
    }
    return out;
}

bool contains_all(const std::vector<std::string>& haystack, const Itemset& needle) {
    return std::includes(haystack.begin(), haystack.end(), needle.begin(), needle.end());
}

}  // namespace

std::vector<Transaction> make_transactions(const std::vector<ArticleRecord>& corpus) {
    return collect(corpus, nullptr);
}

std::vector<Transaction> make_transactions(const std::vector<ArticleRecord>& corpus,
                                           const TimeWindow& window) {
    return collect(corpus, &window);
}

std::map<Itemset, std::size_t> mine_frequent_itemsets(const std::vector<Transaction>& transactions,
                                                      std::size_t min_support_count,
                                                      std::size_t max_size) {
    if (min_support_count < 1) throw std::invalid_argument("min_support_count must be >= 1");
    std::map<Itemset, std::size_t> frequent;
    if (max_size == 0) return frequent;

    // level 1: singleton counts
    std::map<std::string, std::size_t> singles;
    for (const Transaction& t : transactions)
        for (const std::string& item : t.items) ++singles[item];
    std::vector<Itemset> level;
    for (const auto& [item, n] : singles) {
        if (n >= min_support_count) {
            frequent[{item}] = n;
            level.push_back({item});
        }
    }

    for (std::size_t size = 2; size <= max_size && level.size() >= 2; ++size) {
        // join step: two frequent (size-1)-sets sharing a (size-2)-prefix
        std::vector<Itemset> candidates;
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin(),
                                level[b].end() - 1))
                    break;  // level is sorted, prefixes only match in a contiguous run
                Itemset cand = level[a];
                cand.push_back(level[b].back());
                // prune step: every (size-1)-subset must be frequent
                bool all_frequent = true;
                Itemset sub(cand.begin() + 1, cand.end());
                for (std::size_t drop = 0; all_frequent && drop < cand.size(); ++drop) {
                    if (!frequent.count(sub)) all_frequent = false;
                    if (drop < cand.size() - 1) sub[drop] = cand[drop];
                }
                if (all_frequent) candidates.push_back(std::move(cand));
            }
        }
        std::map<Itemset, std::size_t> counts;
        for (const Transaction& t : transactions) {
            if (t.items.size() < size) continue;
            for (const Itemset& cand : candidates)
                if (contains_all(t.items, cand)) ++counts[cand];
        }
        level.clear();
        for (const auto& [cand, n] : counts) {
            if (n >= min_support_count) {
                frequent[cand] = n;
                level.push_back(cand);
            }
        }
    }
    return frequent;
}

std::string itemset_text(const Itemset& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ';';
        out += items[i];
    }
    return out;
}

std::vector<AssociationRule> derive_rules(const std::map<Itemset, std::size_t>& itemsets,
                                          double min_confidence,
                                          std::size_t transaction_count) {
    if (min_confidence <= 0.0 || min_confidence > 1.0)
        throw std::invalid_argument("min_confidence must be in (0, 1]");

    auto support_of = [&](const Itemset& s) {
        auto it = itemsets.find(s);
        if (it == itemsets.end())
            throw std::logic_error("itemset map not closed under subsets: missing " +
                                   itemset_text(s));
        return it->second;
    };

    std::vector<AssociationRule> rules;
    for (const auto& [itemset, support] : itemsets) {
        std::size_t n = itemset.size();
        if (n < 2) continue;
        // every non-empty proper subset as antecedent
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            AssociationRule rule;
            for (std::size_t bit = 0; bit < n; ++bit) {
                if (mask & (1u << bit)) rule.antecedent.push_back(itemset[bit]);
                else rule.consequent.push_back(itemset[bit]);
            }
            std::size_t sup_a = support_of(rule.antecedent);
            rule.support_count = support;
            rule.confidence = static_cast<double>(support) / static_cast<double>(sup_a);
            if (rule.confidence < min_confidence) continue;
            std::size_t sup_c = support_of(rule.consequent);
            rule.lift = rule.confidence * static_cast<double>(transaction_count) /
                        static_cast<double>(sup_c);
            rule.low_lift = rule.lift < 1.0;
            rules.push_back(std::move(rule));
        }
    }
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.lift != b.lift) return a.lift > b.lift;
        if (a.confidence != b.confidence) return a.confidence > b.confidence;
        auto at = std::pair(itemset_text(a.antecedent), itemset_text(a.consequent));
        auto bt = std::pair(itemset_text(b.antecedent), itemset_text(b.consequent));
        return at < bt;
    });
    return rules;
}

}  // namespace kcn
