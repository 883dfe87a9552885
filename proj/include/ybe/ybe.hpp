/*
 *   Copyright 2026 The ybe-growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file ybe.hpp
 *
 * Umbrella header for the library.
 */

#pragma once

#include <ybe/algebra/conjugacy.hpp>
#include <ybe/algebra/group_table.hpp>
#include <ybe/algebra/length_series.hpp>
#include <ybe/algebra/permutation.hpp>
#include <ybe/algebra/quandle.hpp>
#include <ybe/algebra/set_partition.hpp>
#include <ybe/budget.hpp>
#include <ybe/growth/class2.hpp>
#include <ybe/growth/defect.hpp>
#include <ybe/number_theory.hpp>
#include <ybe/oracle/ball.hpp>
#include <ybe/oracle/orbit.hpp>
#include <ybe/reflection/frs.hpp>
#include <ybe/reflection/invariants.hpp>
#include <ybe/reflection/lemmas.hpp>
#include <ybe/reflection/normal_form.hpp>
#include <ybe/series/bivariate_series.hpp>
#include <ybe/series/json.hpp>
#include <ybe/series/polynomial.hpp>
#include <ybe/series/rational.hpp>
#include <ybe/series/rational_gf.hpp>
#include <ybe/series/truncated_series.hpp>
#include <ybe/transposition/monoid.hpp>
#include <ybe/verify/acceptance.hpp>
#include <ybe/version.hpp>
