/** Command line: prepare | train | evaluate | toy-corpus. */
import * as fs from 'fs';
import * as path from 'path';
import { parseArgs } from 'node:util';

import { DEFAULT_RATIO, SplitRatio, filterByLength, readCorpusTsv, splitByWord } from './data';
import { evaluate, loadCheckpoint } from './evaluate';
import { DESK_DEFAULTS, PAPER_SCALE, TrainOptions, loadPrepared, train } from './train';
import { Vocab } from './vocab';

function parseRatio(text: string): SplitRatio {
  const parts = text.split('/').map(Number);
  if (parts.length !== 3 || parts.some((p) => !Number.isInteger(p) || p < 0)) {
    throw new Error(`bad ratio ${text}, expected e.g. 80/10/10`);
  }
  if (parts[0] + parts[1] + parts[2] !== 100) {
    throw new Error('ratio parts must sum to 100');
  }
  return { train: parts[0], val: parts[1], test: parts[2] };
}

function cmdPrepare(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      tsv: { type: 'string' },
      out: { type: 'string' },
      'max-len': { type: 'string', default: '14' },
      seed: { type: 'string', default: '0' },
      ratio: { type: 'string', default: '80/10/10' },
    },
  });
  if (!values.tsv || !values.out) {
    console.error('usage: prepare --tsv corpus.tsv --out data_dir [--max-len 14] [--seed 0] [--ratio 80/10/10]');
    return 2;
  }
  const maxLen = parseInt(values['max-len']!, 10);
  const seed = parseInt(values.seed!, 10);
  const ratio = values.ratio === '80/10/10' ? DEFAULT_RATIO : parseRatio(values.ratio!);

  const samples = readCorpusTsv(values.tsv);
  const { kept, dropped, dropRate } = filterByLength(samples, maxLen);
  console.error(
    `read ${samples.length} samples, dropped ${dropped} over ${maxLen} chars ` +
      `(${(dropRate * 100).toFixed(2)}%)`,
  );
  if (kept.length === 0) {
    console.error('error: EmptyAfterFilter — no samples within max-len');
    return 1;
  }
  const splits = splitByWord(kept, ratio, seed);
  const vocab = Vocab.build(kept.flatMap((s) => [s.accented, s.canonical]));

  fs.mkdirSync(values.out, { recursive: true });
  fs.writeFileSync(path.join(values.out, 'vocab.json'), JSON.stringify(vocab.toJSON()));
  fs.writeFileSync(
    path.join(values.out, 'config.json'),
    JSON.stringify({
      max_len: maxLen,
      seed,
      ratio,
      drop_rate: dropRate,
      counts: { train: splits.train.length, val: splits.val.length, test: splits.test.length },
    }),
  );
  for (const name of ['train', 'val', 'test'] as const) {
    fs.writeFileSync(path.join(values.out, `${name}.json`), JSON.stringify(splits[name]));
  }
  console.error(
    `splits: train=${splits.train.length} val=${splits.val.length} test=${splits.test.length}, ` +
      `vocab=${vocab.size}`,
  );
  return 0;
}

async function cmdTrain(argv: string[]): Promise<number> {
  const { values } = parseArgs({
    args: argv,
    options: {
      data: { type: 'string' },
      out: { type: 'string' },
      hidden: { type: 'string' },
      batch: { type: 'string' },
      epochs: { type: 'string' },
      lr: { type: 'string' },
      'copy-pairs': { type: 'string' },
      'lr-decay-epochs': { type: 'string' },
      'lr-decay-factor': { type: 'string' },
      seed: { type: 'string' },
      'paper-scale': { type: 'boolean', default: false },
    },
  });
  if (!values.data || !values.out) {
    console.error('usage: train --data data_dir --out checkpoint_dir [--hidden N] [--batch N] [--epochs N] [--lr F] [--copy-pairs N] [--paper-scale]');
    return 2;
  }
  const options: TrainOptions = { ...DESK_DEFAULTS };
  if (values['paper-scale']) Object.assign(options, PAPER_SCALE);
  if (values.hidden) options.hidden = parseInt(values.hidden, 10);
  if (values.batch) options.batchSize = parseInt(values.batch, 10);
  if (values.epochs) options.epochs = parseInt(values.epochs, 10);
  if (values.lr) options.learningRate = parseFloat(values.lr);
  if (values['copy-pairs']) options.copyPairs = parseInt(values['copy-pairs'], 10);
  if (values['lr-decay-epochs']) {
    options.lrDecayEpochs = values['lr-decay-epochs'].split(',').filter(Boolean).map(Number);
  }
  if (values['lr-decay-factor']) options.lrDecayFactor = parseFloat(values['lr-decay-factor']);
  if (values.seed) options.seed = parseInt(values.seed, 10);

  const data = loadPrepared(values.data);
  await train(data, options, values.out, (line) => console.error(line));
  console.error(`checkpoint written to ${values.out}`);
  return 0;
}

async function cmdEvaluate(argv: string[]): Promise<number> {
  const { values } = parseArgs({
    args: argv,
    options: {
      checkpoint: { type: 'string' },
      data: { type: 'string' },
      split: { type: 'string', default: 'test' },
      out: { type: 'string' },
    },
  });
  if (!values.checkpoint || !values.data) {
    console.error('usage: evaluate --checkpoint dir --data data_dir [--split test] [--out eval.json]');
    return 2;
  }
  const data = loadPrepared(values.data);
  const split = values.split as 'train' | 'val' | 'test';
  if (!(split in data.splits)) {
    console.error(`error: unknown split ${split}`);
    return 2;
  }
  const checkpoint = await loadCheckpoint(values.checkpoint);
  const result = evaluate(checkpoint, data.splits[split]);
  const text = JSON.stringify(result, null, 2);
  if (values.out) {
    fs.writeFileSync(values.out, text + '\n');
  }
  console.log(text);
  return 0;
}

function cmdToyCorpus(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      in: { type: 'string' },
      out: { type: 'string' },
      repeats: { type: 'string', default: '1' },
    },
  });
  if (!values.in || !values.out) {
    console.error('usage: toy-corpus --in corpus.tsv --out toy.tsv [--repeats N]');
    return 2;
  }
  const repeats = parseInt(values.repeats!, 10);
  const samples = readCorpusTsv(values.in);
  const lines: string[] = [];
  for (let r = 0; r < repeats; r++) {
    for (const s of samples) {
      const accented = s.canonical.endsWith('z')
        ? s.canonical.slice(0, -1) + 's'
        : s.canonical;
      lines.push(`${accented}\t${s.canonical}\t${s.word}\ttoy_zs`);
    }
  }
  fs.writeFileSync(values.out, lines.join('\n') + '\n');
  console.error(`wrote ${lines.length} toy records (word-final z -> s) to ${values.out}`);
  return 0;
}

export async function main(argv: string[]): Promise<number> {
  const [command, ...rest] = argv;
  switch (command) {
    case 'prepare':
      return cmdPrepare(rest);
    case 'train':
      return cmdTrain(rest);
    case 'evaluate':
      return cmdEvaluate(rest);
    case 'toy-corpus':
      return cmdToyCorpus(rest);
    default:
      console.error('usage: normalizer <prepare|train|evaluate|toy-corpus> ...');
      return 2;
  }
}

if (require.main === module) {
  main(process.argv.slice(2))
    .then((code) => process.exit(code))
    .catch((err) => {
      console.error(`error: ${err.message}`);
      process.exit(1);
    });
}
