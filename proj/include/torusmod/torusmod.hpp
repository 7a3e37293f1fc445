/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORUSMOD_TORUSMOD_HPP
#define TORUSMOD_TORUSMOD_HPP

#include "difference.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "poly_fields.hpp"
#include "rep_data.hpp"
#include "roots.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "simple_module.hpp"
#include "tensor_module.hpp"
#include "text.hpp"
#include "torus_fields.hpp"

#endif  // TORUSMOD_TORUSMOD_HPP
